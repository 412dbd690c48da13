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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parsig/data.hpp"
#include "parsig/linalg.hpp"

namespace parsig {

/// Counts of one minimal unit-cost alignment. `referenceLength` is the
/// denominator of the error rate: the reference length only, not the sum of
/// both lengths.
struct EditSummary {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t referenceLength = 0;

  std::size_t errors() const { return substitutions + deletions + insertions; }
  EditSummary& operator+=(const EditSummary& o);
  bool operator==(const EditSummary&) const = default;
};

/// Levenshtein alignment of `hyp` against `ref`. Among minimal alignments the
/// backtrace prefers substitution (or match), then insertion, then deletion.
template <class T>
EditSummary editDistance(std::span<const T> ref, std::span<const T> hyp) {
  const auto n = static_cast<Eigen::Index>(ref.size());
  const auto m = static_cast<Eigen::Index>(hyp.size());
  Matrix<std::size_t> cost(n + 1, m + 1);
  for (Eigen::Index i = 0; i <= n; ++i) cost(i, 0) = static_cast<std::size_t>(i);
  for (Eigen::Index j = 0; j <= m; ++j) cost(0, j) = static_cast<std::size_t>(j);
  for (Eigen::Index i = 1; i <= n; ++i) {
    for (Eigen::Index j = 1; j <= m; ++j) {
      const std::size_t sub = cost(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      cost(i, j) = std::min({sub, cost(i, j - 1) + 1, cost(i - 1, j) + 1});
    }
  }

  EditSummary s;
  s.referenceLength = ref.size();
  Eigen::Index i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = ref[i - 1] == hyp[j - 1];
      if (cost(i, j) == cost(i - 1, j - 1) + (same ? 0 : 1)) {
        if (!same) ++s.substitutions;
        --i, --j;
        continue;
      }
    }
    if (j > 0 && cost(i, j) == cost(i, j - 1) + 1) {
      ++s.insertions;
      --j;
    } else {
      ++s.deletions;
      --i;
    }
  }
  return s;
}

template <class T>
EditSummary editDistance(const std::vector<T>& ref, const std::vector<T>& hyp) {
  return editDistance(std::span<const T>(ref), std::span<const T>(hyp));
}

/// Whitespace-separated words.
EditSummary wordEdits(std::string_view ref, std::string_view hyp);
/// Unicode code points, whitespace included.
EditSummary charEdits(std::string_view ref, std::string_view hyp);

/// 100 * (S + D + I) / N. N = 0 is accepted only for an empty alignment.
double errorRate(const EditSummary& summary);

struct ErrorRates {
  double wer = 0.0;
  double cer = 0.0;
  EditSummary words;
  EditSummary chars;
};

/// Pooled rates: counts are summed over all pairs before dividing, so long
/// references weigh more than short ones.
ErrorRates corpusErrorRates(const std::vector<std::string>& refs,
                            const std::vector<std::string>& hyps);

double lemmaAccuracy(const std::vector<std::string>& gold,
                     const std::vector<std::string>& predicted);

class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(TagSet classes);

  /// Rows are gold classes, columns predictions.
  void add(std::size_t actual, std::size_t predicted, long count = 1);
  void add(std::string_view actual, std::string_view predicted);

  const TagSet& classes() const { return classes_; }
  const Matrix<long>& counts() const { return counts_; }
  Matrix<long>& counts() { return counts_; }
  long total() const { return counts_.sum(); }

 private:
  TagSet classes_;
  Matrix<long> counts_;
};

/// One row of a per-class table. Empty optionals are undefined ratios
/// (for example precision of a class that was never predicted).
struct ClassScores {
  std::optional<double> acc;
  std::optional<double> auc;
  std::optional<double> f1;
  std::optional<double> precision;
  std::optional<double> recall;
};

struct ClassMetrics {
  std::vector<std::string> classes;
  std::vector<ClassScores> perClass;
  /// Arithmetic mean over classes whose value is defined.
  ClassScores macro;
  /// From one-vs-rest counts pooled over classes.
  ClassScores micro;
  /// trace / total.
  double overallAccuracy = 0.0;
};

ClassMetrics classMetrics(const ConfusionMatrix& cm);

}  // namespace parsig
