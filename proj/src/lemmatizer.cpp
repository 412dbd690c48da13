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

#include "parsig/lemmatizer.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "parsig/error.hpp"
#include "parsig/utf8.hpp"

namespace parsig {

LemmaLexicon::LemmaLexicon(const std::vector<std::pair<std::string, std::string>>& entries) {
  for (const auto& [surface, lemma] : entries) {
    const auto [it, inserted] = entries_.emplace(surface, lemma);
    if (!inserted && it->second != lemma)
      throw InputError("conflicting lemmas for '" + surface + "': '" + it->second + "' and '" + lemma + "'");
  }
  // Closure: each lemma maps to itself unless it is itself an inflected
  // surface form with a different lemma, which would break idempotence.
  for (const auto& [surface, lemma] : entries) {
    const auto [it, inserted] = entries_.emplace(lemma, lemma);
    if (!inserted && it->second != lemma)
      throw InputError("lemma '" + lemma + "' is listed as a surface form of '" + it->second + "'");
  }
}

LemmaLexicon LemmaLexicon::parse(std::string_view tsv) {
  return LemmaLexicon(parseTwoColumnTsv(tsv));
}

const std::string* LemmaLexicon::find(std::string_view surface) const {
  const auto it = entries_.find(std::string(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

bool LemmaLexicon::containsLemma(std::string_view lemma) const {
  const auto* hit = find(lemma);
  return hit && *hit == lemma;
}

LemmaRules::LemmaRules(std::vector<LemmaRule> rules) : rules_(std::move(rules)) {
  std::set<int> priorities;
  for (const auto& r : rules_) {
    if (r.suffix.empty()) throw InputError("lemma rule with empty suffix");
    if (r.minStemLength < 1) throw InputError("lemma rule minStemLength must be at least 1");
    if (!priorities.insert(r.priority).second)
      throw InputError("duplicate lemma rule priority " + std::to_string(r.priority));
  }
  std::sort(rules_.begin(), rules_.end(),
            [](const LemmaRule& a, const LemmaRule& b) { return a.priority < b.priority; });
}

namespace {

template <class T>
T parseNumber(std::string_view s, std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return value;
}

}  // namespace

LemmaRules LemmaRules::parse(std::string_view tsv) {
  const auto lines = splitLines(tsv);
  if (lines.empty() || lines.front() != "#lemma-rules-v1")
    throw ParseError(1, "missing '#lemma-rules-v1' header");
  std::vector<LemmaRule> rules;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto line = lines[n];
    if (line.empty() || line.front() == '#') continue;
    const auto f = splitTabs(line);
    if (f.size() != 4) throw ParseError(n + 1, "expected priority, suffix, replacement, minStemLength");
    LemmaRule r;
    r.priority = parseNumber<int>(f[0], n + 1, "priority");
    r.suffix = std::string(f[1]);
    r.replacement = f[2] == "_" ? std::string() : std::string(f[2]);
    r.minStemLength = parseNumber<std::size_t>(f[3], n + 1, "minStemLength");
    rules.push_back(std::move(r));
  }
  return LemmaRules(std::move(rules));
}

std::string lemmatize(const LemmaLexicon& lexicon, const LemmaRules& rules, std::string_view token) {
  if (const auto* hit = lexicon.find(token)) return *hit;
  for (const auto& r : rules.rules()) {
    if (!utf8::endsWith(token, r.suffix)) continue;
    const std::string_view stem = token.substr(0, token.size() - r.suffix.size());
    if (utf8::length(stem) < r.minStemLength) continue;
    std::string candidate = std::string(stem) + r.replacement;
    if (lexicon.containsLemma(candidate)) return candidate;
  }
  return std::string(token);
}

std::vector<AnnotatedToken> lemmatizeSentence(const LemmaLexicon& lexicon, const LemmaRules& rules,
                                              std::vector<AnnotatedToken> tokens) {
  for (auto& t : tokens) t.lemma = lemmatize(lexicon, rules, t.text);
  return tokens;
}

}  // namespace parsig
