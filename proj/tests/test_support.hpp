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

// Fixtures and independent oracles shared by the unit and acceptance tests.
// The oracles deliberately avoid the library's algorithms.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "parsig/data.hpp"
#include "parsig/hmm.hpp"
#include "parsig/utf8.hpp"

namespace parsig::testing {

inline std::filesystem::path resource(const std::string& rel) {
  return std::filesystem::path(PARSIG_RESOURCE_DIR) / rel;
}
inline std::filesystem::path golden(const std::string& rel) {
  return std::filesystem::path(PARSIG_GOLDEN_DIR) / rel;
}

// The example sentence and its three published annotation layers.
inline const std::string kExampleSentence = "ān uzīd frāmōš kun ud ān nē mad ēstēd rāy tēmār bēš ma bar";
inline const std::vector<std::string> kExampleWords = {"ān", "uzīd", "frāmōš", "kun", "ud", "ān", "nē",
                                                       "mad", "ēstēd", "rāy", "tēmār", "bēš", "ma", "bar"};
inline const std::vector<std::string> kExampleLemmas = {"ān", "uzīd", "frāmōš", "kun", "ud", "ān", "nē",
                                                        "mad", "ēst", "rāy", "tēmār", "bēš", "ma", "bar"};
inline const std::vector<std::string> kExamplePos = {"DET", "V", "N", "V", "CONJ", "DET", "ADV",
                                                     "V", "V", "POST", "N", "N", "ADV", "N"};
inline const std::vector<std::string> kExampleTranslit = {"ZK", "ʾwcyt", "plʾmwš", "OḆYDWNty", "W",
                                                          "ZK", "LA", "mt", "YKOYMWyt'", "lʾd",
                                                          "tymʾl", "byš", "AL", "YḆLWN"};

/// Edit distance by top-down recursion over suffixes, memoized on (i, j).
template <class T>
std::size_t recursiveEditDistance(const std::vector<T>& a, const std::vector<T>& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    const auto key = std::make_pair(i, j);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    const std::size_t best = std::min({go(i + 1, j) + 1, go(i, j + 1) + 1, go(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1)});
    memo[key] = best;
    return best;
  };
  return go(0, 0);
}

/// Random HMM with `tags` states and `vocab` known words; every row is a
/// proper distribution.
inline HmmModel randomHmm(std::mt19937_64& rng, std::size_t tags, std::size_t vocab) {
  std::uniform_real_distribution<double> u(0.01, 1.0);
  std::vector<std::string> names;
  for (std::size_t t = 0; t < tags; ++t) names.push_back("T" + std::to_string(t));
  HmmModel m;
  m.tags = TagSet(names);
  for (std::size_t w = 0; w < vocab; ++w) m.vocabulary["w" + std::to_string(w)] = w;
  auto fill = [&](MatrixXd& mat, Eigen::Index rows, Eigen::Index cols) {
    mat.resize(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      double sum = 0.0;
      for (Eigen::Index c = 0; c < cols; ++c) sum += mat(r, c) = u(rng);
      for (Eigen::Index c = 0; c < cols; ++c) mat(r, c) = std::log(mat(r, c) / sum);
    }
  };
  fill(m.transition, static_cast<Eigen::Index>(tags + 1), static_cast<Eigen::Index>(tags));
  fill(m.emission, static_cast<Eigen::Index>(tags), static_cast<Eigen::Index>(vocab + 1));
  return m;
}

/// Maximum path score over all |tags|^n tag sequences.
inline double bruteForceBestScore(const HmmModel& m, const std::vector<std::string>& words) {
  const std::size_t k = m.tags.size();
  std::vector<std::size_t> path(words.size(), 0);
  double best = -std::numeric_limits<double>::infinity();
  while (true) {
    double score = 0.0;
    Eigen::Index prev = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      const auto it = m.vocabulary.find(words[i]);
      const auto col = static_cast<Eigen::Index>(it == m.vocabulary.end() ? m.vocabulary.size() : it->second);
      const auto t = static_cast<Eigen::Index>(path[i]);
      score += m.transition(prev, t) + m.emission(t, col);
      prev = t + 1;
    }
    best = std::max(best, score);
    std::size_t i = 0;
    while (i < path.size() && ++path[i] == k) path[i++] = 0;
    if (i == path.size()) break;
  }
  return best;
}

/// Every split of `word` (by code point) into contiguous pieces.
inline std::vector<std::vector<std::string>> allSegmentations(const std::string& word) {
  const auto chars = utf8::chars(word);
  std::vector<std::vector<std::string>> out;
  const std::size_t n = chars.size();
  if (n == 0) return {{}};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<std::string> pieces{std::string(chars[0])};
    for (std::size_t i = 1; i < n; ++i) {
      if (mask & (std::uint64_t{1} << (i - 1))) pieces.emplace_back();
      pieces.back() += chars[i];
    }
    out.push_back(std::move(pieces));
  }
  return out;
}

/// Relative difference |a - b| / max(|a|, |b|, floor).
inline double relativeError(double a, double b, double floor = 1e-8) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

}  // namespace parsig::testing
