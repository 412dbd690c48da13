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
#include <string>
#include <string_view>
#include <vector>

#include "parsig/data.hpp"

namespace parsig {

/// Surface form -> lemma table. Every lemma is also a key mapping to itself,
/// which makes lemmatization idempotent.
class LemmaLexicon {
 public:
  LemmaLexicon() = default;
  explicit LemmaLexicon(const std::vector<std::pair<std::string, std::string>>& entries);

  /// surface<TAB>lemma rows.
  static LemmaLexicon parse(std::string_view tsv);

  const std::map<std::string, std::string>& entries() const { return entries_; }
  const std::string* find(std::string_view surface) const;
  bool containsLemma(std::string_view lemma) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::string> entries_;
};

/// Strip `suffix`, append `replacement`. The stem left after stripping must
/// have at least `minStemLength` code points.
struct LemmaRule {
  int priority = 0;
  std::string suffix;
  std::string replacement;
  std::size_t minStemLength = 1;
};

/// Rules sorted by ascending priority (lower value is tried first).
class LemmaRules {
 public:
  LemmaRules() = default;
  explicit LemmaRules(std::vector<LemmaRule> rules);

  /// "#lemma-rules-v1" header, then priority<TAB>suffix<TAB>replacement<TAB>minStemLength.
  static LemmaRules parse(std::string_view tsv);

  const std::vector<LemmaRule>& rules() const { return rules_; }

 private:
  std::vector<LemmaRule> rules_;
};

/// Lexicon hit, else the first rule whose result is a known lemma, else the
/// token itself.
std::string lemmatize(const LemmaLexicon& lexicon, const LemmaRules& rules, std::string_view token);

std::vector<AnnotatedToken> lemmatizeSentence(const LemmaLexicon& lexicon, const LemmaRules& rules,
                                              std::vector<AnnotatedToken> tokens);

}  // namespace parsig
