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

#include <gtest/gtest.h>

#include <set>

#include "parsig/data.hpp"
#include "parsig/error.hpp"
#include "test_support.hpp"

namespace parsig {
namespace {

Corpus numberedCorpus(int n) {
  std::vector<Sentence> sentences;
  for (int i = 0; i < n; ++i) {
    Sentence s;
    s.tokens.push_back(AnnotatedToken{0, "w" + std::to_string(i), std::nullopt, std::string("N"), std::nullopt});
    sentences.push_back(s);
  }
  return Corpus::fromSentences(sentences);
}

std::multiset<std::string> texts(const Corpus& c) {
  std::multiset<std::string> out;
  for (const Sentence* s : c.sentences()) out.insert(s->tokens[0].text);
  return out;
}

TEST(ParseCorpus, EmptyInput) {
  const auto c = parseCorpus("");
  EXPECT_EQ(c.sentenceCount(), 0u);
  EXPECT_EQ(c.tokenCount(), 0u);
}

TEST(ParseCorpus, BlankLineSeparatesSentences) {
  const auto c = parseCorpus("ān\tān\tDET\tZK\n\nud\tud\tCONJ\tW");
  ASSERT_EQ(c.sentenceCount(), 2u);
  const auto s = c.sentences();
  EXPECT_EQ(s[0]->tokens.at(0).id, 0u);
  EXPECT_EQ(s[1]->tokens.at(0).id, 0u);
  EXPECT_EQ(s[1]->tokens[0].translit, "W");
}

TEST(ParseCorpus, ExampleSentenceFile) {
  const auto c = parseCorpus(readTextFile(testing::resource("corpus/example_sentence.tsv")));
  ASSERT_EQ(c.sentenceCount(), 1u);
  const auto& s = *c.sentences()[0];
  ASSERT_EQ(s.size(), 14u);
  EXPECT_EQ(s.tokens[8].text, "ēstēd");
  EXPECT_EQ(s.tokens[8].lemma, "ēst");
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s.tokens[i].id, i);
}

TEST(ParseCorpus, UnderscoreMeansAbsent) {
  const auto c = parseCorpus("ān\t_\tDET\n");
  const auto& t = c.sentences()[0]->tokens[0];
  EXPECT_FALSE(t.lemma.has_value());
  EXPECT_EQ(t.pos, "DET");
  EXPECT_FALSE(t.translit.has_value());
}

TEST(ParseCorpus, TooManyFieldsReportsLine) {
  try {
    parseCorpus("ān\tān\tDET\tZK\n\nud\tud\tCONJ\tW\textra\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseCorpus, UnknownTagIsNamed) {
  try {
    parseCorpus("ān\tān\tPRO\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("PRO"), std::string::npos);
  }
}

TEST(ParseCorpus, DocumentsAndRoundTrip) {
  const std::string text = "#doc first\nān\tān\tDET\tZK\nud\t_\tCONJ\n\n#doc second\nbar\tbar\tN\tYḆLWN\n";
  const auto c = parseCorpus(text);
  ASSERT_EQ(c.documents.size(), 2u);
  EXPECT_EQ(c.documents[0].name, "first");
  EXPECT_EQ(parseCorpus(serializeCorpus(c)), c);
}

TEST(ParseCorpus, RoundTripBundledCorpora) {
  for (const char* f : {"corpus/synthetic.tsv", "corpus/demo_snippet.tsv", "corpus/example_sentence.tsv"}) {
    const auto c = parseCorpus(readTextFile(testing::resource(f)));
    EXPECT_EQ(parseCorpus(serializeCorpus(c)), c) << f;
  }
}

TEST(SplitTrainTest, TenPercentOfTen) {
  const auto [train, test] = splitTrainTest(numberedCorpus(10), 0.1, 42);
  EXPECT_EQ(train.sentenceCount(), 9u);
  EXPECT_EQ(test.sentenceCount(), 1u);
}

TEST(SplitTrainTest, HalfOfTwo) {
  const auto [train, test] = splitTrainTest(numberedCorpus(2), 0.5, 1);
  EXPECT_EQ(train.sentenceCount(), 1u);
  EXPECT_EQ(test.sentenceCount(), 1u);
}

TEST(SplitTrainTest, DeterministicDisjointCovering) {
  const auto corpus = numberedCorpus(37);
  const auto a = splitTrainTest(corpus, 0.3, 9);
  const auto b = splitTrainTest(corpus, 0.3, 9);
  EXPECT_EQ(a.first, b.first);
  EXPECT_EQ(a.second, b.second);
  EXPECT_EQ(a.second.sentenceCount(), 11u);  // round(0.3 * 37)
  auto all = texts(a.first);
  for (const auto& t : texts(a.second)) {
    EXPECT_FALSE(all.contains(t));
    all.insert(t);
  }
  EXPECT_EQ(all, texts(corpus));
}

TEST(SplitTrainTest, Errors) {
  EXPECT_THROW(splitTrainTest(numberedCorpus(1), 0.5, 0), InputError);
  EXPECT_THROW(splitTrainTest(numberedCorpus(5), 0.0, 0), InputError);
  EXPECT_THROW(splitTrainTest(numberedCorpus(5), 1.0, 0), InputError);
}

TEST(KFolds, TenOfTen) {
  const auto folds = kFolds(numberedCorpus(10), 10, 3);
  ASSERT_EQ(folds.size(), 10u);
  for (const auto& f : folds) {
    EXPECT_EQ(f.validation.sentenceCount(), 1u);
    EXPECT_EQ(f.train.sentenceCount(), 9u);
  }
}

TEST(KFolds, EvenSplitAndPartition) {
  const auto two = kFolds(numberedCorpus(4), 2, 0);
  EXPECT_EQ(two[0].validation.sentenceCount(), 2u);
  EXPECT_EQ(two[1].validation.sentenceCount(), 2u);

  const auto corpus = numberedCorpus(23);
  const auto folds = kFolds(corpus, 5, 11);
  std::multiset<std::string> seen;
  std::size_t lo = 1000, hi = 0;
  for (const auto& f : folds) {
    const auto v = texts(f.validation);
    seen.insert(v.begin(), v.end());
    lo = std::min(lo, v.size());
    hi = std::max(hi, v.size());
    for (const auto& t : texts(f.train)) EXPECT_FALSE(v.contains(t));
  }
  EXPECT_EQ(seen, texts(corpus));
  EXPECT_LE(hi - lo, 1u);
  EXPECT_THROW(kFolds(numberedCorpus(3), 4, 0), InputError);
  EXPECT_THROW(kFolds(numberedCorpus(3), 1, 0), InputError);
}

TEST(CorpusStats, EmptyAndExample) {
  EXPECT_EQ(corpusStats(Corpus{}), CorpusStats{});
  const auto c = parseCorpus(readTextFile(testing::resource("corpus/example_sentence.tsv")));
  const auto s = corpusStats(c);
  EXPECT_EQ(s.documents, 1u);
  EXPECT_EQ(s.words, 14u);
  EXPECT_EQ(s.uniqueTokens, 13u);  // "ān" occurs twice
  EXPECT_EQ(s.distinctLemmas, 13u);
}

TEST(CorpusStats, WordsEqualSumOfSentenceLengths) {
  const auto c = parseCorpus(readTextFile(testing::resource("corpus/synthetic.tsv")));
  std::size_t sum = 0;
  for (const Sentence* s : c.sentences()) sum += s->size();
  EXPECT_EQ(corpusStats(c).words, sum);
  EXPECT_LE(corpusStats(c).uniqueTokens, sum);
}

TEST(TwoColumnTsv, RejectsMalformedLine) {
  EXPECT_THROW(parseTwoColumnTsv("a\tb\nc\n"), ParseError);
  EXPECT_EQ(parseTwoColumnTsv("# comment\na\tb\n").size(), 1u);
}

TEST(Files, MissingFileIsResourceError) {
  EXPECT_THROW(readTextFile("/nonexistent/parsig/file.tsv"), ResourceError);
}

}  // namespace
}  // namespace parsig
