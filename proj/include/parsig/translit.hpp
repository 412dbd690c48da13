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

// Phonemic transcription -> transliteration, and transliteration -> Book
// Pahlavi glyph codes.
//
// Transliteration goes through an exception lexicon first (Aramaeograms,
// written in capitals, e.g. "ān" -> "ZK") and otherwise through a single
// left-to-right pass of prioritized, context-restricted rewrite rules. The
// mapping is many-to-one, so no inverse is offered.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "parsig/data.hpp"

namespace parsig {

class TranslitLexicon {
 public:
  TranslitLexicon() = default;
  explicit TranslitLexicon(const std::vector<std::pair<std::string, std::string>>& entries);

  static TranslitLexicon parse(std::string_view tsv);

  const std::string* find(std::string_view surface) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

enum class RuleContext { Anywhere, WordInitial, WordFinal };

std::string_view toString(RuleContext c);
RuleContext ruleContextFromString(std::string_view s);

struct TranslitRule {
  int priority = 0;
  RuleContext context = RuleContext::Anywhere;
  std::string pattern;
  std::string replacement;
};

/// Sorted by ascending priority; lower values are tried first.
class TranslitRules {
 public:
  TranslitRules() = default;
  explicit TranslitRules(std::vector<TranslitRule> rules);

  /// "#p2t-rules-v1" header, then priority<TAB>context<TAB>pattern<TAB>replacement.
  /// A replacement of "_" deletes the pattern.
  static TranslitRules parse(std::string_view tsv);

  const std::vector<TranslitRule>& rules() const { return rules_; }

 private:
  std::vector<TranslitRule> rules_;
};

std::string phonemeToTranslit(const TranslitLexicon& lexicon, const TranslitRules& rules,
                              std::string_view token);

std::vector<AnnotatedToken> translitSentence(const TranslitLexicon& lexicon, const TranslitRules& rules,
                                             std::vector<AnnotatedToken> tokens);

/// Transliteration grapheme -> glyph code point. Base letters live in the
/// Private Use Area block U+E000..U+E00F, one code point per letter shape;
/// several graphemes can share a shape (g, d and y are one letter). Variant
/// marks live from U+E010 upwards.
class GlyphTable {
 public:
  static constexpr char32_t kBaseBegin = 0xE000;
  static constexpr char32_t kBaseEnd = 0xE010;
  static constexpr std::size_t kLetterCount = 14;

  GlyphTable() = default;
  /// Throws unless exactly kLetterCount distinct base code points are present.
  explicit GlyphTable(std::map<std::string, char32_t> entries);

  /// grapheme<TAB>hex rows ("E00A" or "U+E00A").
  static GlyphTable parse(std::string_view tsv);

  const std::map<std::string, char32_t>& entries() const { return entries_; }
  std::size_t baseLetterCount() const;
  std::size_t maxGraphemeBytes() const { return maxKeyBytes_; }

 private:
  std::map<std::string, char32_t> entries_;
  std::size_t maxKeyBytes_ = 0;
};

struct GlyphMatch {
  std::string grapheme;
  char32_t glyph = 0;
  std::size_t offset = 0;  // bytes
};

/// Greedy longest-match segmentation of `translit` into table graphemes, in
/// reading order. Throws InputError naming the first unresolvable grapheme
/// and its byte offset.
std::vector<GlyphMatch> matchGraphemes(const GlyphTable& table, std::string_view translit);

/// Glyph codes of one word in right-to-left display order.
std::vector<char32_t> translitToGlyphs(const GlyphTable& table, std::string_view translit);

/// A whole line: words separated by U+0020, the full sequence in
/// right-to-left display order.
std::vector<char32_t> translitLineToGlyphs(const GlyphTable& table, std::string_view line);

/// "E00A E003 ..." as written by the `convert` command.
std::string formatCodepoints(const std::vector<char32_t>& codes);

}  // namespace parsig
