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

#include "parsig/embed.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <random>

#include "parsig/error.hpp"

namespace parsig {

void SkipGramConfig::validate() const {
  if (dims < 1) throw InputError("dims must be at least 1");
  if (window < 1) throw InputError("window must be at least 1");
  if (negatives < 0) throw InputError("negatives must be non-negative");
  if (epochs < 1) throw InputError("epochs must be at least 1");
  if (!(initialLr > 0.0)) throw InputError("initial learning rate must be positive");
  if (minCount < 1) throw InputError("minCount must be at least 1");
}

void EmbeddingMatrix::buildIndex() {
  index_.clear();
  for (std::size_t i = 0; i < words.size(); ++i)
    if (!index_.emplace(words[i], i).second) throw InputError("duplicate word '" + words[i] + "' in vectors");
}

std::optional<std::size_t> EmbeddingMatrix::index(std::string_view word) const {
  const auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vector<double> EmbeddingMatrix::vector(std::string_view word) const {
  const auto i = index(word);
  if (!i) throw InputError("word '" + std::string(word) + "' is not in the embedding vocabulary");
  return input.row(static_cast<Eigen::Index>(*i)).transpose();
}

EmbeddingMatrix trainSkipGram(const Corpus& corpus, const SkipGramConfig& config, std::uint64_t seed) {
  config.validate();

  std::map<std::string, long, std::less<>> freq;
  for (const Sentence* s : corpus.sentences())
    for (const auto& t : s->tokens) ++freq[t.text];
  std::vector<std::pair<std::string, long>> kept;
  for (const auto& [w, c] : freq)
    if (c >= config.minCount) kept.emplace_back(w, c);
  if (kept.size() < 2) throw InputError("skip-gram training needs at least two distinct words after minCount");
  std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.second > b.second; });

  EmbeddingMatrix m;
  m.config = config;
  m.seed = seed;
  for (auto& [w, c] : kept) {
    m.words.push_back(w);
    m.counts.push_back(c);
  }
  m.buildIndex();

  std::vector<std::vector<Eigen::Index>> sentences;
  std::size_t pairsPerEpoch = 0;
  for (const Sentence* s : corpus.sentences()) {
    std::vector<Eigen::Index> ids;
    for (const auto& t : s->tokens)
      if (const auto i = m.index(t.text)) ids.push_back(static_cast<Eigen::Index>(*i));
    const auto n = ids.size();
    const auto w = static_cast<std::size_t>(config.window);
    for (std::size_t i = 0; i < n; ++i) pairsPerEpoch += std::min(i, w) + std::min(n - 1 - i, w);
    sentences.push_back(std::move(ids));
  }

  const auto vocab = static_cast<Eigen::Index>(m.words.size());
  const Eigen::Index d = config.dims;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> init(-0.5 / static_cast<double>(d), 0.5 / static_cast<double>(d));
  m.input.resize(vocab, d);
  for (Eigen::Index r = 0; r < vocab; ++r)
    for (Eigen::Index c = 0; c < d; ++c) m.input(r, c) = init(rng);
  m.output = MatrixXd::Zero(vocab, d);

  std::vector<double> weights;
  for (const long c : m.counts) weights.push_back(std::pow(static_cast<double>(c), 0.75));
  std::discrete_distribution<Eigen::Index> noise(weights.begin(), weights.end());

  const double totalPairs = static_cast<double>(pairsPerEpoch) * config.epochs;
  const double finalLr = config.initialLr / 100.0;
  double processed = 0.0;
  VectorXd gradCenter(d);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    double lossSum = 0.0;
    for (const auto& ids : sentences) {
      const auto n = static_cast<std::ptrdiff_t>(ids.size());
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Eigen::Index center = ids[static_cast<std::size_t>(i)];
        const auto lo = std::max<std::ptrdiff_t>(0, i - config.window);
        const auto hi = std::min<std::ptrdiff_t>(n - 1, i + config.window);
        for (std::ptrdiff_t j = lo; j <= hi; ++j) {
          if (j == i) continue;
          const Eigen::Index context = ids[static_cast<std::size_t>(j)];
          const double lr =
              totalPairs > 1 ? config.initialLr + (finalLr - config.initialLr) * processed / (totalPairs - 1)
                             : config.initialLr;
          processed += 1.0;

          // Sparse SGD step, equivalent to pairGradient on the touched rows.
          auto v = m.input.row(center);
          gradCenter.setZero();
          const double pos = sigmoid(m.output.row(context).dot(v)) - 1.0;
          lossSum -= logSigmoid(m.output.row(context).dot(v));
          gradCenter += pos * m.output.row(context).transpose();
          m.output.row(context) -= lr * pos * v;
          for (int k = 0; k < config.negatives; ++k) {
            const Eigen::Index neg = noise(rng);
            if (neg == context) continue;
            const double score = m.output.row(neg).dot(v);
            lossSum -= logSigmoid(-score);
            const double g = sigmoid(score);
            gradCenter += g * m.output.row(neg).transpose();
            m.output.row(neg) -= lr * g * v;
          }
          v -= lr * gradCenter.transpose();
        }
      }
    }
    m.epochLoss.push_back(pairsPerEpoch > 0 ? lossSum / static_cast<double>(pairsPerEpoch) : 0.0);
  }
  if (!m.input.allFinite()) throw InputError("skip-gram training diverged");
  return m;
}

double cosine(const Vector<double>& a, const Vector<double>& b) {
  if (a.size() != b.size()) throw InputError("cosine of vectors with different dimensions");
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw InputError("cosine of a zero-norm vector");
  return std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
}

std::vector<std::pair<std::string, double>> nearestNeighbors(const EmbeddingMatrix& matrix, std::string_view word,
                                                             int k) {
  if (k < 1) throw InputError("k must be at least 1");
  const auto q = matrix.index(word);
  if (!q) throw InputError("word '" + std::string(word) + "' is not in the embedding vocabulary");
  const VectorXd query = matrix.input.row(static_cast<Eigen::Index>(*q)).transpose();

  std::vector<std::pair<std::string, double>> scored;
  for (std::size_t i = 0; i < matrix.words.size(); ++i) {
    if (i == *q) continue;
    scored.emplace_back(matrix.words[i], cosine(query, matrix.input.row(static_cast<Eigen::Index>(i)).transpose()));
  }
  const auto keep = std::min(scored.size(), static_cast<std::size_t>(k));
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep), scored.end(),
                    [](const auto& a, const auto& b) { return a.second != b.second ? a.second > b.second : a.first < b.first; });
  scored.resize(keep);
  return scored;
}

std::string serializeVectors(const EmbeddingMatrix& matrix) {
  std::string out = std::to_string(matrix.input.rows()) + " " + std::to_string(matrix.input.cols()) + "\n";
  char buf[32];
  for (Eigen::Index r = 0; r < matrix.input.rows(); ++r) {
    out += matrix.words[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < matrix.input.cols(); ++c) {
      std::snprintf(buf, sizeof buf, " %.17g", matrix.input(r, c));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

EmbeddingMatrix parseVectors(std::string_view text) {
  const auto lines = splitLines(text);
  std::size_t li = 0;
  while (li < lines.size() && lines[li].empty()) ++li;
  if (li == lines.size()) throw ResourceError("vector file is empty");

  auto fields = [](std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto end = std::min(line.find(' ', pos), line.size());
      if (end > pos) out.push_back(line.substr(pos, end - pos));
      pos = end + 1;
    }
    return out;
  };
  auto number = [](std::string_view s, auto& value) {
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || p != s.data() + s.size())
      throw ResourceError("bad number '" + std::string(s) + "' in vector file");
  };

  const auto header = fields(lines[li]);
  if (header.size() != 2) throw ResourceError("vector file header must be 'count dims'");
  long count = 0;
  long dims = 0;
  number(header[0], count);
  number(header[1], dims);
  if (count < 0 || dims < 1) throw ResourceError("vector file header has invalid sizes");

  EmbeddingMatrix m;
  m.config.dims = static_cast<int>(dims);
  m.input.resize(count, dims);
  for (++li; li < lines.size(); ++li) {
    if (lines[li].empty()) continue;
    const auto f = fields(lines[li]);
    if (static_cast<long>(f.size()) != dims + 1)
      throw ResourceError("line " + std::to_string(li + 1) + ": expected a word and " + std::to_string(dims) +
                          " values");
    if (static_cast<long>(m.words.size()) == count) throw ResourceError("vector file has more rows than its header");
    const auto r = static_cast<Eigen::Index>(m.words.size());
    m.words.emplace_back(f[0]);
    for (long c = 0; c < dims; ++c) number(f[static_cast<std::size_t>(c + 1)], m.input(r, c));
  }
  if (static_cast<long>(m.words.size()) != count) throw ResourceError("vector file has fewer rows than its header");
  m.counts.assign(m.words.size(), 0);
  try {
    m.buildIndex();
  } catch (const InputError& e) {
    throw ResourceError(e.what());
  }
  return m;
}

}  // namespace parsig
