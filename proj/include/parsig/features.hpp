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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parsig/data.hpp"
#include "parsig/linalg.hpp"

namespace parsig {

inline constexpr std::string_view kSentenceStart = "⟨S⟩";
inline constexpr std::string_view kSentenceEnd = "⟨/S⟩";
inline constexpr std::string_view kStartTag = "⟨START⟩";

/// Sparse named features of one token. Categorical features are one-hot
/// entries named "key=value" with value 1; ends_iha, is_first, is_last and
/// word_len are numeric.
struct FeatureVector {
  std::map<std::string, double> values;

  /// Value part of the "key=value" entry, if any.
  std::optional<std::string> categorical(std::string_view key) const;
  double numeric(std::string_view name) const;

  bool operator==(const FeatureVector&) const = default;
};

/// The twelve hand-crafted token features: word, ends_iha, is_first,
/// is_last, prev_word, next_word, first2, last2, prefix1, suffix1, prev_tag
/// and word_len.
FeatureVector extractFeatures(std::span<const std::string> words, std::size_t index,
                              std::string_view prevTag);

/// One vector per token with gold previous tags, plus the gold labels.
struct TrainingSet {
  std::vector<FeatureVector> vectors;
  std::vector<std::string> labels;
};

/// Throws InputError on a token without POS annotation.
TrainingSet trainingExamples(const Corpus& corpus);

/// Feature name -> column map, built from training vectors in sorted name
/// order. Names unseen at build time are ignored when vectorizing.
class FeatureSpace {
 public:
  FeatureSpace() = default;
  explicit FeatureSpace(const std::vector<FeatureVector>& vectors);
  explicit FeatureSpace(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> column(std::string_view name) const;

  RowMajorSparse<double> vectorize(const std::vector<FeatureVector>& vectors) const;
  /// (column, value) pairs of one vector, ascending by column.
  std::vector<std::pair<std::size_t, double>> sparseRow(const FeatureVector& v) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace parsig
