// Copyright 2026 The parsig-nlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Skip-gram word vectors trained with negative sampling.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parsig/data.hpp"
#include "parsig/linalg.hpp"

namespace parsig {

struct SkipGramConfig {
  int dims = 100;
  int window = 5;
  int negatives = 5;
  int epochs = 5;
  double initialLr = 0.025;
  int minCount = 1;

  void validate() const;
};

struct EmbeddingMatrix {
  /// Descending frequency, ties in byte order.
  std::vector<std::string> words;
  /// Training frequencies; zero for a matrix loaded from text.
  std::vector<long> counts;
  MatrixXd input;   // |V| x dims, the word vectors
  MatrixXd output;  // |V| x dims, context vectors; empty after loading
  SkipGramConfig config;
  std::uint64_t seed = 0;
  /// Mean pair loss of each epoch, measured before each update.
  std::vector<double> epochLoss;

  std::optional<std::size_t> index(std::string_view word) const;
  Vector<double> vector(std::string_view word) const;  // throws on OOV

 private:
  friend EmbeddingMatrix trainSkipGram(const Corpus&, const SkipGramConfig&, std::uint64_t);
  friend EmbeddingMatrix parseVectors(std::string_view);
  void buildIndex();
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Loss of one (center, context) pair with sampled negatives:
///   -log sigmoid(u.v) - sum_k log sigmoid(-n_k.v)
/// where v is the center's input vector, u the context's output vector and
/// the rows of `negatives` are the output vectors of the negative samples.
template <class Scalar>
Scalar pairLoss(const Vector<Scalar>& center, const Vector<Scalar>& context, const Matrix<Scalar>& negatives) {
  Scalar loss = -logSigmoid(context.dot(center));
  for (Eigen::Index k = 0; k < negatives.rows(); ++k) loss -= logSigmoid(-negatives.row(k).dot(center));
  return loss;
}

template <class Scalar>
void pairGradient(const Vector<Scalar>& center, const Vector<Scalar>& context, const Matrix<Scalar>& negatives,
                  Vector<Scalar>& gradCenter, Vector<Scalar>& gradContext, Matrix<Scalar>& gradNegatives) {
  const Scalar pos = sigmoid(context.dot(center)) - Scalar(1);
  gradContext = pos * center;
  gradCenter = pos * context;
  gradNegatives.resize(negatives.rows(), negatives.cols());
  for (Eigen::Index k = 0; k < negatives.rows(); ++k) {
    const Scalar neg = sigmoid(negatives.row(k).dot(center));
    gradNegatives.row(k) = neg * center.transpose();
    gradCenter += neg * negatives.row(k).transpose();
  }
}

/// Single-threaded SGD over every (center, context) pair within `window`
/// tokens, sentence by sentence. Negatives come from the unigram^0.75
/// distribution; a draw equal to the context word is skipped. The learning
/// rate decays linearly from initialLr to initialLr / 100 over all pairs.
EmbeddingMatrix trainSkipGram(const Corpus& corpus, const SkipGramConfig& config = {}, std::uint64_t seed = 0);

/// a.b / (|a||b|); InputError if either norm is zero.
double cosine(const Vector<double>& a, const Vector<double>& b);

/// Top-k words by cosine to `word`, excluding it, ties in byte order.
std::vector<std::pair<std::string, double>> nearestNeighbors(const EmbeddingMatrix& matrix, std::string_view word,
                                                             int k);

/// "count dims" header, then one word and its input vector per line.
std::string serializeVectors(const EmbeddingMatrix& matrix);
EmbeddingMatrix parseVectors(std::string_view text);

}  // namespace parsig
