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

#include "parsig/data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "parsig/error.hpp"
#include "parsig/utf8.hpp"

namespace parsig {

std::vector<std::string> Sentence::words() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

std::size_t Corpus::sentenceCount() const {
  std::size_t n = 0;
  for (const auto& d : documents) n += d.sentences.size();
  return n;
}

std::size_t Corpus::tokenCount() const {
  std::size_t n = 0;
  for (const auto& d : documents)
    for (const auto& s : d.sentences) n += s.size();
  return n;
}

std::vector<const Sentence*> Corpus::sentences() const {
  std::vector<const Sentence*> out;
  for (const auto& d : documents)
    for (const auto& s : d.sentences) out.push_back(&s);
  return out;
}

Corpus Corpus::fromSentences(std::vector<Sentence> sentences) {
  Corpus c;
  c.documents.push_back(Document{std::nullopt, std::move(sentences)});
  return c;
}

TagSet::TagSet(std::vector<std::string> tags) : tags_(std::move(tags)) {
  if (tags_.empty()) throw InputError("tag set must not be empty");
  std::set<std::string> seen;
  for (const auto& t : tags_)
    if (!seen.insert(t).second) throw InputError("duplicate tag '" + t + "'");
}

const TagSet& TagSet::defaults() {
  static const TagSet kDefaults({"ADJ", "ADV", "CONJ", "DET", "EZ", "N", "NUM", "PART", "POST",
                                 "PREP", "PRON", "Unknown", "V"});
  return kDefaults;
}

std::optional<std::size_t> TagSet::index(std::string_view tag) const {
  const auto it = std::find(tags_.begin(), tags_.end(), tag);
  if (it == tags_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - tags_.begin());
}

TagSet TagSet::restrictedTo(const Corpus& corpus) const {
  std::vector<bool> used(tags_.size(), false);
  for (const auto* s : corpus.sentences())
    for (const auto& t : s->tokens)
      if (t.pos)
        if (auto i = index(*t.pos)) used[*i] = true;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < tags_.size(); ++i)
    if (used[i]) kept.push_back(tags_[i]);
  if (kept.empty()) throw InputError("corpus carries no POS annotation");
  return TagSet(std::move(kept));
}

std::vector<std::string_view> splitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> splitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find('\t', start);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

namespace {

bool isBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

bool hasWhitespace(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); i += utf8::sequenceLength(static_cast<unsigned char>(s[i])))
    if (utf8::isSpace(utf8::decode(s, i))) return true;
  return false;
}

std::optional<std::string> optionalField(std::string_view f) {
  if (f.empty() || f == "_") return std::nullopt;
  return std::string(f);
}

// Rebuilds a corpus from a sorted subset of flat sentence indices, keeping
// document grouping.
Corpus selectSentences(const Corpus& corpus, const std::vector<std::size_t>& sortedIndices) {
  Corpus out;
  std::size_t flat = 0;
  auto next = sortedIndices.begin();
  for (const auto& doc : corpus.documents) {
    Document picked{doc.name, {}};
    for (const auto& s : doc.sentences) {
      if (next != sortedIndices.end() && *next == flat) {
        picked.sentences.push_back(s);
        ++next;
      }
      ++flat;
    }
    if (!picked.sentences.empty()) out.documents.push_back(std::move(picked));
  }
  return out;
}

std::vector<std::size_t> shuffledIndices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  return idx;
}

}  // namespace

Corpus parseCorpus(std::string_view tsv, const TagSet& tags) {
  Corpus corpus;
  Sentence current;

  auto flush = [&] {
    if (current.empty()) return;
    if (corpus.documents.empty()) corpus.documents.emplace_back();
    corpus.documents.back().sentences.push_back(std::move(current));
    current = Sentence{};
  };

  const auto lines = splitLines(tsv);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string_view line = lines[n];
    const std::size_t lineNo = n + 1;
    if (isBlank(line)) {
      flush();
      continue;
    }
    if (line.starts_with("#doc") && (line.size() == 4 || line[4] == ' ' || line[4] == '\t')) {
      flush();
      Document doc;
      if (line.size() > 5) doc.name = std::string(line.substr(5));
      corpus.documents.push_back(std::move(doc));
      continue;
    }
    if (line.front() == '#') continue;

    const auto fields = splitTabs(line);
    if (fields.size() > 4)
      throw ParseError(lineNo, "expected 1-4 tab-separated fields, got " + std::to_string(fields.size()));
    if (fields[0].empty() || fields[0] == "_") throw ParseError(lineNo, "empty token text");
    if (hasWhitespace(fields[0]))
      throw ParseError(lineNo, "token text contains whitespace: '" + std::string(fields[0]) + "'");

    AnnotatedToken tok;
    tok.id = current.tokens.size();
    tok.text = std::string(fields[0]);
    if (fields.size() > 1) tok.lemma = optionalField(fields[1]);
    if (fields.size() > 2) tok.pos = optionalField(fields[2]);
    if (fields.size() > 3) tok.translit = optionalField(fields[3]);
    if (tok.pos && !tags.contains(*tok.pos))
      throw ParseError(lineNo, "unknown POS tag '" + *tok.pos + "'");
    current.tokens.push_back(std::move(tok));
  }
  flush();
  return corpus;
}

std::string serializeCorpus(const Corpus& corpus) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    const auto& doc = corpus.documents[d];
    if (doc.name || d > 0) {
      if (!first) out << '\n';
      out << "#doc";
      if (doc.name) out << ' ' << *doc.name;
      out << '\n';
      first = false;
    }
    for (const auto& s : doc.sentences) {
      if (!first) out << '\n';
      first = false;
      for (const auto& t : s.tokens) {
        const std::optional<std::string>* layers[] = {&t.lemma, &t.pos, &t.translit};
        int last = -1;
        for (int i = 0; i < 3; ++i)
          if (layers[i]->has_value()) last = i;
        out << t.text;
        for (int i = 0; i <= last; ++i) out << '\t' << layers[i]->value_or("_");
        out << '\n';
      }
    }
  }
  return out.str();
}

std::pair<Corpus, Corpus> splitTrainTest(const Corpus& corpus, double testFraction,
                                         std::uint64_t seed) {
  if (!(testFraction > 0.0 && testFraction < 1.0))
    throw InputError("test fraction must lie strictly between 0 and 1");
  const std::size_t n = corpus.sentenceCount();
  if (n < 2) throw InputError("need at least 2 sentences to split, got " + std::to_string(n));

  auto testSize = static_cast<std::size_t>(std::llround(testFraction * static_cast<double>(n)));
  testSize = std::clamp<std::size_t>(testSize, 1, n - 1);

  const auto order = shuffledIndices(n, seed);
  std::vector<std::size_t> test(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(testSize));
  std::vector<std::size_t> train(order.begin() + static_cast<std::ptrdiff_t>(testSize), order.end());
  std::sort(test.begin(), test.end());
  std::sort(train.begin(), train.end());
  return {selectSentences(corpus, train), selectSentences(corpus, test)};
}

std::vector<Fold> kFolds(const Corpus& corpus, int k, std::uint64_t seed) {
  const std::size_t n = corpus.sentenceCount();
  if (k < 2) throw InputError("k must be at least 2");
  if (static_cast<std::size_t>(k) > n)
    throw InputError("k = " + std::to_string(k) + " exceeds sentence count " + std::to_string(n));

  const auto order = shuffledIndices(n, seed);
  const std::size_t base = n / static_cast<std::size_t>(k);
  const std::size_t extra = n % static_cast<std::size_t>(k);

  std::vector<Fold> folds;
  std::size_t begin = 0;
  for (std::size_t f = 0; f < static_cast<std::size_t>(k); ++f) {
    const std::size_t size = base + (f < extra ? 1 : 0);
    std::vector<std::size_t> val(order.begin() + static_cast<std::ptrdiff_t>(begin),
                                 order.begin() + static_cast<std::ptrdiff_t>(begin + size));
    std::vector<std::size_t> train;
    train.reserve(n - size);
    train.insert(train.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(begin));
    train.insert(train.end(), order.begin() + static_cast<std::ptrdiff_t>(begin + size), order.end());
    std::sort(val.begin(), val.end());
    std::sort(train.begin(), train.end());
    folds.push_back(Fold{selectSentences(corpus, train), selectSentences(corpus, val)});
    begin += size;
  }
  return folds;
}

CorpusStats corpusStats(const Corpus& corpus) {
  std::set<std::string_view> surfaces;
  std::set<std::string_view> lemmas;
  CorpusStats stats;
  stats.documents = corpus.documents.size();
  for (const auto* s : corpus.sentences()) {
    for (const auto& t : s->tokens) {
      ++stats.words;
      surfaces.insert(t.text);
      if (t.lemma) lemmas.insert(*t.lemma);
    }
  }
  stats.uniqueTokens = surfaces.size();
  stats.distinctLemmas = lemmas.size();
  return stats;
}

std::vector<std::pair<std::string, std::string>> parseTwoColumnTsv(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> rows;
  const auto lines = splitLines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line = lines[n];
    if (isBlank(line) || line.front() == '#') continue;
    const auto fields = splitTabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      throw ParseError(n + 1, "expected two non-empty tab-separated fields");
    rows.emplace_back(std::string(fields[0]), std::string(fields[1]));
  }
  return rows;
}

std::string readTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeTextFile(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ResourceError("cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace parsig
