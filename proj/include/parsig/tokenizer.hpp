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

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "parsig/data.hpp"

namespace parsig {

/// Whitespace tokenization with leading/trailing punctuation split off as
/// one token per character. Ids run from 0.
std::vector<AnnotatedToken> wordTokenize(std::string_view sentence);

struct UnigramTrainConfig {
  /// Initial candidate pool size as a multiple of the target vocabulary.
  double seedVocabMultiplier = 4.0;
  double pruneKeepRatio = 0.75;
  int emIterationsPerRound = 2;
  /// In code points.
  int maxPieceLength = 8;
  /// Score of a character missing from the vocabulary at segmentation time.
  double unkLogProb = -20.0;

  void validate() const;
};

struct Segmentation {
  std::vector<std::string> pieces;
  double score = 0.0;
};

/// Unigram language model over subword pieces. Log-probabilities are
/// natural logs and sum (in probability space) to one.
class UnigramVocab {
 public:
  UnigramVocab() = default;
  UnigramVocab(std::map<std::string, double> pieces, double unkLogProb = -20.0);

  const std::map<std::string, double>& pieces() const { return pieces_; }
  /// Single code points; never pruned.
  const std::set<std::string>& requiredPieces() const { return required_; }
  std::size_t size() const { return pieces_.size(); }
  bool contains(std::string_view piece) const;
  double logProb(std::string_view piece) const;
  double unkLogProb() const { return unkLogProb_; }
  std::size_t maxPieceLength() const { return maxPieceLength_; }

  /// Viterbi segmentation. Ties go to fewer pieces, then to the longest
  /// leftmost piece. Characters outside the vocabulary become single
  /// pieces scored at unkLogProb(); this never fails.
  Segmentation segment(std::string_view word) const;

  /// log of the summed probability of every segmentation (forward pass).
  double wordLogLikelihood(std::string_view word) const;

  /// "#unigram-v1" header, then piece<TAB>logprob sorted by piece.
  std::string serialize() const;
  static UnigramVocab parse(std::string_view text);

 private:
  std::map<std::string, double> pieces_;
  std::set<std::string> required_;
  double unkLogProb_ = -20.0;
  std::size_t maxPieceLength_ = 1;
};

/// Corpus log-likelihood per EM round: entry [r][0] is the value entering
/// round r, [r][i] the value after its i-th EM iteration.
struct UnigramTrainTrace {
  std::vector<std::vector<double>> roundLikelihoods;
  std::vector<std::size_t> roundVocabSizes;
};

/// Word-frequency table of a corpus (token surface forms).
std::map<std::string, std::uint64_t> wordFrequencies(const Corpus& corpus);

UnigramVocab trainUnigram(const Corpus& corpus, std::size_t vocabSize,
                          const UnigramTrainConfig& config = {}, std::uint64_t seed = 0,
                          UnigramTrainTrace* trace = nullptr);

UnigramVocab trainUnigram(const std::map<std::string, std::uint64_t>& words,
                          std::size_t vocabSize, const UnigramTrainConfig& config = {},
                          std::uint64_t seed = 0, UnigramTrainTrace* trace = nullptr);

}  // namespace parsig
