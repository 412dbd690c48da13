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

// Annotated corpora and the plain-text resources the other modules load.
//
// Corpus TSV, one token per line:
//
//   text<TAB>lemma<TAB>pos<TAB>translit
//
// Trailing fields may be omitted and "_" marks an absent field. A blank line
// ends a sentence and a line "#doc [name]" starts a new document. Other lines
// starting with '#' are comments.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parsig {

struct AnnotatedToken {
  std::size_t id = 0;
  std::string text;
  std::optional<std::string> lemma;
  std::optional<std::string> pos;
  std::optional<std::string> translit;

  bool operator==(const AnnotatedToken&) const = default;
};

struct Sentence {
  std::vector<AnnotatedToken> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  std::vector<std::string> words() const;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::optional<std::string> name;
  std::vector<Sentence> sentences;

  bool operator==(const Document&) const = default;
};

struct Corpus {
  std::vector<Document> documents;

  std::size_t sentenceCount() const;
  std::size_t tokenCount() const;
  /// Sentences in document order.
  std::vector<const Sentence*> sentences() const;

  /// One unnamed document holding `sentences`.
  static Corpus fromSentences(std::vector<Sentence> sentences);

  bool operator==(const Corpus&) const = default;
};

/// Ordered set of POS tags. Declaration order is the tie-breaking order for
/// every decoder and classifier in the library.
class TagSet {
 public:
  TagSet() = default;
  explicit TagSet(std::vector<std::string> tags);

  static const TagSet& defaults();

  const std::vector<std::string>& tags() const { return tags_; }
  std::size_t size() const { return tags_.size(); }
  const std::string& operator[](std::size_t i) const { return tags_[i]; }
  std::optional<std::size_t> index(std::string_view tag) const;
  bool contains(std::string_view tag) const { return index(tag).has_value(); }

  /// Tags of this set that occur in `corpus`, in this set's order.
  TagSet restrictedTo(const Corpus& corpus) const;

  bool operator==(const TagSet&) const = default;

 private:
  std::vector<std::string> tags_;
};

struct CorpusStats {
  std::size_t documents = 0;
  std::size_t words = 0;
  std::size_t uniqueTokens = 0;
  std::size_t distinctLemmas = 0;

  bool operator==(const CorpusStats&) const = default;
};

Corpus parseCorpus(std::string_view tsv, const TagSet& tags = TagSet::defaults());
std::string serializeCorpus(const Corpus& corpus);

/// Sentence-level split. The test side holds round(testFraction * n)
/// sentences, clamped to [1, n - 1]; both sides keep corpus order.
std::pair<Corpus, Corpus> splitTrainTest(const Corpus& corpus, double testFraction,
                                         std::uint64_t seed);

struct Fold {
  Corpus train;
  Corpus validation;
};

std::vector<Fold> kFolds(const Corpus& corpus, int k, std::uint64_t seed);

CorpusStats corpusStats(const Corpus& corpus);

/// Two-column TSV (lemma lexicons, transliteration lexicons, glyph tables).
/// Blank lines and lines starting with '#' are skipped.
std::vector<std::pair<std::string, std::string>> parseTwoColumnTsv(std::string_view text);

std::string readTextFile(const std::filesystem::path& path);
void writeTextFile(const std::filesystem::path& path, std::string_view content);

/// Lines with the trailing '\r' removed; a final empty line is dropped.
std::vector<std::string_view> splitLines(std::string_view text);
std::vector<std::string_view> splitTabs(std::string_view line);

}  // namespace parsig
