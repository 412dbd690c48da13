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

#include "parsig/features.hpp"

#include <algorithm>
#include <set>

#include "parsig/error.hpp"
#include "parsig/utf8.hpp"

namespace parsig {

std::optional<std::string> FeatureVector::categorical(std::string_view key) const {
  const std::string prefix = std::string(key) + "=";
  const auto it = values.lower_bound(prefix);
  if (it == values.end() || !it->first.starts_with(prefix)) return std::nullopt;
  return it->first.substr(prefix.size());
}

double FeatureVector::numeric(std::string_view name) const {
  const auto it = values.find(std::string(name));
  return it == values.end() ? 0.0 : it->second;
}

FeatureVector extractFeatures(std::span<const std::string> words, std::size_t index,
                              std::string_view prevTag) {
  const std::string& w = words[index];
  const bool first = index == 0;
  const bool last = index + 1 == words.size();

  FeatureVector f;
  auto cat = [&f](std::string_view key, std::string_view value) {
    f.values[std::string(key) + "=" + std::string(value)] = 1.0;
  };
  cat("word", w);
  f.values["ends_iha"] = utf8::endsWith(w, "īhā") ? 1.0 : 0.0;
  f.values["is_first"] = first ? 1.0 : 0.0;
  f.values["is_last"] = last ? 1.0 : 0.0;
  cat("prev_word", first ? std::string(kSentenceStart) : words[index - 1]);
  cat("next_word", last ? std::string(kSentenceEnd) : words[index + 1]);
  cat("first2", utf8::prefix(w, 2));
  cat("last2", utf8::suffix(w, 2));
  cat("prefix1", utf8::prefix(w, 1));
  cat("suffix1", utf8::suffix(w, 1));
  cat("prev_tag", prevTag);
  f.values["word_len"] = static_cast<double>(utf8::length(w));
  return f;
}

TrainingSet trainingExamples(const Corpus& corpus) {
  TrainingSet set;
  for (const auto* s : corpus.sentences()) {
    const auto words = s->words();
    std::string prev(kStartTag);
    for (std::size_t i = 0; i < s->tokens.size(); ++i) {
      const auto& tok = s->tokens[i];
      if (!tok.pos) throw InputError("token '" + tok.text + "' has no POS annotation");
      set.vectors.push_back(extractFeatures(words, i, prev));
      set.labels.push_back(*tok.pos);
      prev = *tok.pos;
    }
  }
  return set;
}

FeatureSpace::FeatureSpace(const std::vector<FeatureVector>& vectors) {
  std::set<std::string> names;
  for (const auto& v : vectors)
    for (const auto& [name, value] : v.values) names.insert(name);
  *this = FeatureSpace(std::vector<std::string>(names.begin(), names.end()));
}

FeatureSpace::FeatureSpace(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (!index_.emplace(names_[i], i).second)
      throw InputError("duplicate feature name '" + names_[i] + "'");
}

std::optional<std::size_t> FeatureSpace::column(std::string_view name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, double>> FeatureSpace::sparseRow(const FeatureVector& v) const {
  std::vector<std::pair<std::size_t, double>> row;
  for (const auto& [name, value] : v.values)
    if (value != 0.0)
      if (const auto c = column(name)) row.emplace_back(*c, value);
  std::sort(row.begin(), row.end());
  return row;
}

RowMajorSparse<double> FeatureSpace::vectorize(const std::vector<FeatureVector>& vectors) const {
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (const auto& [c, value] : sparseRow(vectors[r]))
      triplets.emplace_back(static_cast<int>(r), static_cast<int>(c), value);
  RowMajorSparse<double> x(static_cast<Eigen::Index>(vectors.size()), static_cast<Eigen::Index>(size()));
  x.setFromTriplets(triplets.begin(), triplets.end());
  return x;
}

}  // namespace parsig
