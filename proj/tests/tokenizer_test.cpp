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

#include <cmath>
#include <random>

#include "parsig/error.hpp"
#include "parsig/tokenizer.hpp"
#include "test_support.hpp"

namespace parsig {
namespace {

std::vector<std::string> textsOf(const std::vector<AnnotatedToken>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

Corpus corpusOfWords(const std::vector<std::string>& words) {
  Sentence s;
  for (const auto& w : words) s.tokens.push_back(AnnotatedToken{s.tokens.size(), w, {}, {}, {}});
  return Corpus::fromSentences({s});
}

double scoreOf(const UnigramVocab& v, const std::vector<std::string>& pieces) {
  double s = 0.0;
  for (const auto& p : pieces) {
    if (v.contains(p)) s += v.logProb(p);
    else if (utf8::length(p) == 1) s += v.unkLogProb();
    else return -INFINITY;
  }
  return s;
}

TEST(WordTokenize, ExampleSentence) {
  const auto tokens = wordTokenize(testing::kExampleSentence);
  ASSERT_EQ(tokens.size(), 14u);
  EXPECT_EQ(tokens.front().text, "ān");
  EXPECT_EQ(tokens.back().text, "bar");
  EXPECT_EQ(tokens.back().id, 13u);
  EXPECT_EQ(textsOf(tokens), testing::kExampleWords);
}

TEST(WordTokenize, EmptyAndWhitespaceRuns) {
  EXPECT_TRUE(wordTokenize("").empty());
  EXPECT_TRUE(wordTokenize("   \t ").empty());
  EXPECT_EQ(textsOf(wordTokenize("ud  ān")), (std::vector<std::string>{"ud", "ān"}));
}

TEST(WordTokenize, PunctuationSplitOff) {
  EXPECT_EQ(textsOf(wordTokenize("«ān mard,» guft.")),
            (std::vector<std::string>{"«", "ān", "mard", ",", "»", "guft", "."}));
  const auto t = wordTokenize("a, b");
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t[i].id, i);
}

TEST(Segment, SingleCharacter) {
  const UnigramVocab v({{"a", std::log(0.5)}, {"b", std::log(0.5)}});
  EXPECT_EQ(v.segment("a").pieces, std::vector<std::string>{"a"});
}

TEST(Segment, AbabPrefersTwoPairs) {
  const UnigramVocab v({{"a", -2.0}, {"b", -2.0}, {"ab", -1.0}});
  const auto s = v.segment("abab");
  EXPECT_EQ(s.pieces, (std::vector<std::string>{"ab", "ab"}));
  EXPECT_DOUBLE_EQ(s.score, -2.0);
}

TEST(Segment, UnknownCharacterFallsBack) {
  const UnigramVocab v({{"a", std::log(0.5)}, {"b", std::log(0.5)}}, -20.0);
  const auto s = v.segment("azb");
  EXPECT_EQ(s.pieces, (std::vector<std::string>{"a", "z", "b"}));
  EXPECT_NEAR(s.score, 2 * std::log(0.5) - 20.0, 1e-12);
}

TEST(Segment, TiesPreferFewerPieces) {
  // "ab" alone and "a"+"b" both score log 0.25.
  const UnigramVocab v({{"a", std::log(0.5)}, {"b", std::log(0.5)}, {"ab", std::log(0.25)}});
  EXPECT_EQ(v.segment("ab").pieces, std::vector<std::string>{"ab"});
}

TEST(Segment, MatchesExhaustiveOracleOnRandomVocabularies) {
  std::mt19937_64 rng(5);
  const std::vector<std::string> alphabet = {"a", "b", "ā", "š"};
  std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
  std::uniform_real_distribution<double> lp(-6.0, -0.1);
  for (int trial = 0; trial < 40; ++trial) {
    std::map<std::string, double> pieces;
    for (const auto& a : alphabet) pieces[a] = lp(rng);
    for (int i = 0; i < 12; ++i) {
      std::string p;
      for (int n = 2 + static_cast<int>(rng() % 3); n > 0; --n) p += alphabet[letter(rng)];
      pieces[p] = lp(rng);
    }
    const UnigramVocab v(pieces);
    for (int w = 0; w < 5; ++w) {
      std::string word;
      for (int n = 1 + static_cast<int>(rng() % 12); n > 0; --n) word += alphabet[letter(rng)];
      double best = -INFINITY;
      for (const auto& seg : testing::allSegmentations(word)) best = std::max(best, scoreOf(v, seg));
      const auto got = v.segment(word);
      EXPECT_NEAR(got.score, best, 1e-9) << word;
      EXPECT_NEAR(scoreOf(v, got.pieces), got.score, 1e-9);
      std::string joined;
      for (const auto& p : got.pieces) joined += p;
      EXPECT_EQ(joined, word);
    }
  }
}

TEST(WordLikelihood, MatchesSumOverSegmentations) {
  const UnigramVocab v({{"a", std::log(0.3)}, {"b", std::log(0.3)}, {"ab", std::log(0.2)}, {"ba", std::log(0.2)}});
  double sum = 0.0;
  for (const auto& seg : testing::allSegmentations("abab")) sum += std::exp(scoreOf(v, seg));
  EXPECT_NEAR(v.wordLogLikelihood("abab"), std::log(sum), 1e-12);
}

TEST(TrainUnigram, OnlyCharactersFit) {
  const auto v = trainUnigram(corpusOfWords({"a", "b", "a", "b"}), 2);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_NEAR(std::exp(v.logProb("a")), 0.5, 1e-9);
  EXPECT_NEAR(std::exp(v.logProb("b")), 0.5, 1e-9);
}

TEST(TrainUnigram, VocabularySmallerThanAlphabetIsError) {
  EXPECT_THROW(trainUnigram(corpusOfWords({"abc"}), 2), InputError);
}

// Oracle: EM over the fixed candidate set {a, b, ab, ba} with expected
// counts taken by enumerating all eight segmentations of "abab".
std::map<std::string, double> exhaustiveEm(int iterations) {
  std::map<std::string, double> p = {{"a", 0.25}, {"b", 0.25}, {"ab", 0.25}, {"ba", 0.25}};
  const auto segs = testing::allSegmentations("abab");
  for (int it = 0; it < iterations; ++it) {
    std::map<std::string, double> counts;
    double z = 0.0;
    std::vector<double> weights;
    for (const auto& seg : segs) {
      double w = 1.0;
      for (const auto& piece : seg) w *= p.contains(piece) ? p[piece] : 0.0;
      weights.push_back(w);
      z += w;
    }
    for (std::size_t i = 0; i < segs.size(); ++i)
      for (const auto& piece : segs[i]) counts[piece] += weights[i] / z;
    double total = 0.0;
    for (const auto& [k, c] : counts) total += c;
    for (auto& [k, v] : p) v = counts[k] / total;
  }
  return p;
}

TEST(TrainUnigram, AbabPrefersAb) {
  const auto oracle = exhaustiveEm(20);
  ASSERT_GT(oracle.at("ab"), oracle.at("ba"));

  const auto v = trainUnigram(corpusOfWords(std::vector<std::string>(50, "abab")), 4);
  ASSERT_TRUE(v.contains("ab"));
  const double ba = v.contains("ba") ? std::exp(v.logProb("ba")) : 0.0;
  EXPECT_GT(std::exp(v.logProb("ab")), ba);
}

TEST(TrainUnigram, EmNeverDecreasesLikelihood) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::string> words;
    for (int w = 0; w < 30; ++w) {
      std::string s;
      for (int n = 1 + static_cast<int>(rng() % 7); n > 0; --n) s += "abc"[rng() % 3];
      words.push_back(s);
    }
    UnigramTrainTrace trace;
    trainUnigram(corpusOfWords(words), 6, {}, 0, &trace);
    for (const auto& round : trace.roundLikelihoods)
      for (std::size_t i = 1; i < round.size(); ++i)
        EXPECT_GE(round[i], round[i - 1] - 1e-9 * std::abs(round[i - 1]));
  }
}

TEST(TrainUnigram, NormalizedDeterministicAndRoundTrips) {
  const auto corpus = parseCorpus(readTextFile(testing::resource("corpus/synthetic.tsv")));
  const auto a = trainUnigram(corpus, 60, {}, 3);
  const auto b = trainUnigram(corpus, 60, {}, 3);
  EXPECT_EQ(a.serialize(), b.serialize());
  double mass = 0.0;
  for (const auto& [p, lp] : a.pieces()) mass += std::exp(lp);
  EXPECT_NEAR(mass, 1.0, 1e-6);
  for (const auto& [w, c] : wordFrequencies(corpus))
    for (const auto& ch : utf8::chars(w)) EXPECT_TRUE(a.contains(ch)) << ch;
  const auto reread = UnigramVocab::parse(a.serialize());
  EXPECT_EQ(reread.serialize(), a.serialize());
  EXPECT_LE(a.size(), 60u);
}

TEST(UnigramVocab, ParseRejectsMissingHeader) {
  EXPECT_THROW(UnigramVocab::parse("a\t-1\n"), std::exception);
}

}  // namespace
}  // namespace parsig
