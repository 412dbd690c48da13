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

#include "parsig/translit.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>

#include "parsig/error.hpp"
#include "parsig/utf8.hpp"

namespace parsig {

TranslitLexicon::TranslitLexicon(const std::vector<std::pair<std::string, std::string>>& entries) {
  for (const auto& [surface, translit] : entries)
    if (!entries_.emplace(surface, translit).second)
      throw InputError("duplicate transliteration lexicon key '" + surface + "'");
}

TranslitLexicon TranslitLexicon::parse(std::string_view tsv) {
  return TranslitLexicon(parseTwoColumnTsv(tsv));
}

const std::string* TranslitLexicon::find(std::string_view surface) const {
  const auto it = entries_.find(std::string(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

std::string_view toString(RuleContext c) {
  switch (c) {
    case RuleContext::WordInitial: return "word-initial";
    case RuleContext::WordFinal: return "word-final";
    case RuleContext::Anywhere: break;
  }
  return "anywhere";
}

RuleContext ruleContextFromString(std::string_view s) {
  if (s == "anywhere") return RuleContext::Anywhere;
  if (s == "word-initial") return RuleContext::WordInitial;
  if (s == "word-final") return RuleContext::WordFinal;
  throw InputError("unknown rule context '" + std::string(s) + "'");
}

TranslitRules::TranslitRules(std::vector<TranslitRule> rules) : rules_(std::move(rules)) {
  std::set<int> priorities;
  for (const auto& r : rules_) {
    if (r.pattern.empty()) throw InputError("transliteration rule with empty pattern");
    if (!priorities.insert(r.priority).second)
      throw InputError("duplicate transliteration rule priority " + std::to_string(r.priority));
  }
  std::sort(rules_.begin(), rules_.end(),
            [](const TranslitRule& a, const TranslitRule& b) { return a.priority < b.priority; });
}

TranslitRules TranslitRules::parse(std::string_view tsv) {
  const auto lines = splitLines(tsv);
  if (lines.empty() || lines.front() != "#p2t-rules-v1")
    throw ParseError(1, "missing '#p2t-rules-v1' header");
  std::vector<TranslitRule> rules;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto line = lines[n];
    if (line.empty() || line.front() == '#') continue;
    const auto f = splitTabs(line);
    if (f.size() != 4) throw ParseError(n + 1, "expected priority, context, pattern, replacement");
    TranslitRule r;
    const auto [ptr, ec] = std::from_chars(f[0].data(), f[0].data() + f[0].size(), r.priority);
    if (ec != std::errc{} || ptr != f[0].data() + f[0].size())
      throw ParseError(n + 1, "bad priority '" + std::string(f[0]) + "'");
    try {
      r.context = ruleContextFromString(f[1]);
    } catch (const InputError& e) {
      throw ParseError(n + 1, e.what());
    }
    r.pattern = std::string(f[2]);
    r.replacement = f[3] == "_" ? std::string() : std::string(f[3]);
    rules.push_back(std::move(r));
  }
  return TranslitRules(std::move(rules));
}

std::string phonemeToTranslit(const TranslitLexicon& lexicon, const TranslitRules& rules,
                              std::string_view token) {
  if (const auto* hit = lexicon.find(token)) return *hit;

  std::string out;
  std::size_t i = 0;
  while (i < token.size()) {
    const TranslitRule* applied = nullptr;
    for (const auto& r : rules.rules()) {
      if (r.context == RuleContext::WordInitial && i != 0) continue;
      if (token.compare(i, r.pattern.size(), r.pattern) != 0) continue;
      if (r.context == RuleContext::WordFinal && i + r.pattern.size() != token.size()) continue;
      applied = &r;
      break;
    }
    if (applied) {
      out += applied->replacement;
      i += applied->pattern.size();
    } else {
      const std::size_t n = std::min(utf8::sequenceLength(static_cast<unsigned char>(token[i])),
                                     token.size() - i);
      out.append(token.substr(i, n));
      i += n;
    }
  }
  return out;
}

std::vector<AnnotatedToken> translitSentence(const TranslitLexicon& lexicon, const TranslitRules& rules,
                                             std::vector<AnnotatedToken> tokens) {
  for (auto& t : tokens) t.translit = phonemeToTranslit(lexicon, rules, t.text);
  return tokens;
}

GlyphTable::GlyphTable(std::map<std::string, char32_t> entries) : entries_(std::move(entries)) {
  for (const auto& [g, cp] : entries_) {
    if (g.empty()) throw InputError("empty grapheme in glyph table");
    maxKeyBytes_ = std::max(maxKeyBytes_, g.size());
  }
  if (baseLetterCount() != kLetterCount)
    throw InputError("glyph table must define exactly " + std::to_string(kLetterCount) +
                     " base letters, found " + std::to_string(baseLetterCount()));
}

std::size_t GlyphTable::baseLetterCount() const {
  std::set<char32_t> base;
  for (const auto& [g, cp] : entries_)
    if (cp >= kBaseBegin && cp < kBaseEnd) base.insert(cp);
  return base.size();
}

GlyphTable GlyphTable::parse(std::string_view tsv) {
  std::map<std::string, char32_t> entries;
  const auto lines = splitLines(tsv);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line = lines[n];
    if (line.empty() || line.front() == '#') continue;
    const auto f = splitTabs(line);
    if (f.size() != 2 || f[0].empty()) throw ParseError(n + 1, "expected grapheme<TAB>hex-codepoint");
    std::string_view hex = f[1];
    if (hex.starts_with("U+") || hex.starts_with("u+")) hex.remove_prefix(2);
    std::uint32_t cp = 0;
    const auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), cp, 16);
    if (hex.empty() || ec != std::errc{} || ptr != hex.data() + hex.size() || cp > 0x10FFFF)
      throw ParseError(n + 1, "bad codepoint '" + std::string(f[1]) + "'");
    if (!entries.emplace(std::string(f[0]), static_cast<char32_t>(cp)).second)
      throw ParseError(n + 1, "duplicate grapheme '" + std::string(f[0]) + "'");
  }
  return GlyphTable(std::move(entries));
}

namespace {

// `base` is added to reported offsets so line-level callers get
// line-relative positions.
std::vector<GlyphMatch> matchFrom(const GlyphTable& table, std::string_view text, std::size_t base) {
  std::vector<GlyphMatch> out;
  std::size_t i = 0;
  while (i < text.size()) {
    bool found = false;
    for (std::size_t len = std::min(table.maxGraphemeBytes(), text.size() - i); len > 0; --len) {
      const auto it = table.entries().find(std::string(text.substr(i, len)));
      if (it == table.entries().end()) continue;
      out.push_back({it->first, it->second, base + i});
      i += len;
      found = true;
      break;
    }
    if (!found) {
      const std::size_t n = std::min(utf8::sequenceLength(static_cast<unsigned char>(text[i])),
                                     text.size() - i);
      throw InputError("no glyph for grapheme '" + std::string(text.substr(i, n)) +
                       "' at byte offset " + std::to_string(base + i));
    }
  }
  return out;
}

}  // namespace

std::vector<GlyphMatch> matchGraphemes(const GlyphTable& table, std::string_view translit) {
  return matchFrom(table, translit, 0);
}

std::vector<char32_t> translitToGlyphs(const GlyphTable& table, std::string_view translit) {
  std::vector<char32_t> out;
  for (const auto& m : matchGraphemes(table, translit)) out.push_back(m.glyph);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<char32_t> translitLineToGlyphs(const GlyphTable& table, std::string_view line) {
  auto step = [&line](std::size_t i) {
    return utf8::sequenceLength(static_cast<unsigned char>(line[i]));
  };
  std::vector<char32_t> out;
  std::size_t i = 0;
  while (true) {
    while (i < line.size() && utf8::isSpace(utf8::decode(line, i))) i += step(i);
    if (i >= line.size()) break;
    std::size_t end = i;
    while (end < line.size() && !utf8::isSpace(utf8::decode(line, end))) end += step(end);
    if (!out.empty()) out.push_back(U' ');
    for (const auto& m : matchFrom(table, line.substr(i, end - i), i)) out.push_back(m.glyph);
    i = end;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string formatCodepoints(const std::vector<char32_t>& codes) {
  std::string out;
  char buf[16];
  for (std::size_t i = 0; i < codes.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(codes[i]));
    if (i) out += ' ';
    out += buf;
  }
  return out;
}

}  // namespace parsig
