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

#include "parsig/error.hpp"
#include "parsig/tagger.hpp"
#include "test_support.hpp"

namespace parsig {
namespace {

const Corpus& syntheticCorpus() {
  static const Corpus c = parseCorpus(readTextFile(testing::resource("corpus/synthetic.tsv")));
  return c;
}

TEST(TagSentence, SingleTokenUsesStartTag) {
  const auto data = trainingExamples(syntheticCorpus());
  const auto m = trainLogReg(data.vectors, data.labels);
  const std::vector<std::string> words = {"mard"};
  const auto expected = predictLinear(m, extractFeatures(words, 0, kStartTag)).first;
  EXPECT_EQ(tagSentence(m, words), std::vector<std::string>{expected});
}

TEST(TagSentence, GreedyEqualsStepwisePrediction) {
  const auto data = trainingExamples(syntheticCorpus());
  const auto m = trainLogReg(data.vectors, data.labels);
  for (const Sentence* s : syntheticCorpus().sentences()) {
    const auto words = s->words();
    std::vector<std::string> manual;
    std::string prev(kStartTag);
    for (std::size_t i = 0; i < words.size(); ++i) {
      manual.push_back(predictLinear(m, extractFeatures(words, i, prev)).first);
      prev = manual.back();
    }
    EXPECT_EQ(tagSentence(m, words), manual);
  }
}

TEST(PosTagger, AllFamiliesFitSyntheticData) {
  for (const auto family : {ModelFamily::Hmm, ModelFamily::LogReg, ModelFamily::Forest}) {
    const auto tagger = trainTagger(syntheticCorpus(), family, {}, 0);
    EXPECT_EQ(tagger.family(), family);
    EXPECT_GE(tokenAccuracy(tagger, syntheticCorpus()), 0.95) << familyName(family);
    for (const Sentence* s : syntheticCorpus().sentences()) EXPECT_EQ(tagger.tag(s->words()).size(), s->size());
    const auto again = PosTagger::parse(tagger.serialize());
    EXPECT_EQ(again.family(), family);
    EXPECT_EQ(again.tag(testing::kExampleWords), tagger.tag(testing::kExampleWords));
  }
}

TEST(PosTagger, UnknownParameterAndFamily) {
  EXPECT_THROW(trainTagger(syntheticCorpus(), ModelFamily::Hmm, {{"l2", 1.0}}), InputError);
  EXPECT_THROW(parseFamily("crf"), InputError);
  EXPECT_THROW(PosTagger::parse(R"({"format": "#crf-v1"})"), ResourceError);
}

TEST(GridSearch, SingletonGrid) {
  const auto r = gridSearch(syntheticCorpus(), ModelFamily::Hmm, {{{"alpha", 0.01}}}, 5, 0);
  ASSERT_EQ(r.table.size(), 1u);
  EXPECT_EQ(r.bestIndex, 0u);
  EXPECT_EQ(r.table[0].foldAccuracies.size(), 5u);
  EXPECT_GE(r.table[0].meanAccuracy, 0.0);
  EXPECT_LE(r.table[0].meanAccuracy, 1.0);
}

TEST(GridSearch, HeavyShrinkageLoses) {
  // With l2 = 1000 the weights stay near zero, so the model predicts the
  // majority class almost everywhere.
  const auto grid = expandGrid({{"l2", {1000.0, 1.0}}});
  ASSERT_EQ(grid.size(), 2u);
  EXPECT_EQ(grid[0].at("l2"), 1000.0);
  const auto r = gridSearch(syntheticCorpus(), ModelFamily::LogReg, grid, 5, 1);
  EXPECT_EQ(r.best().at("l2"), 1.0);
  EXPECT_GT(r.table[1].meanAccuracy, r.table[0].meanAccuracy);
}

TEST(GridSearch, FailedPointScoresZeroWithNote) {
  const auto r = gridSearch(syntheticCorpus(), ModelFamily::Hmm, {{{"alpha", -1.0}}, {{"alpha", 0.1}}}, 3, 0);
  EXPECT_EQ(r.table[0].meanAccuracy, 0.0);
  ASSERT_TRUE(r.table[0].error.has_value());
  EXPECT_EQ(r.bestIndex, 1u);
}

TEST(GridSearch, TiesGoToEarlierPoint) {
  const auto r = gridSearch(syntheticCorpus(), ModelFamily::Hmm, {{{"alpha", 0.001}}, {{"alpha", 0.001}}}, 3, 0);
  EXPECT_EQ(r.table[0].meanAccuracy, r.table[1].meanAccuracy);
  EXPECT_EQ(r.bestIndex, 0u);
}

TEST(ExpandGrid, CartesianProduct) {
  const auto g = expandGrid({{"a", {1, 2}}, {"b", {3, 4, 5}}});
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g[0], (ParamPoint{{"a", 1}, {"b", 3}}));
  EXPECT_EQ(g[5], (ParamPoint{{"a", 2}, {"b", 5}}));
  EXPECT_THROW(expandGrid({{"a", {}}}), InputError);
}

TEST(SplitEvaluation, HmmGeneralizesOnHeldOutSentences) {
  const auto [train, test] = splitTrainTest(syntheticCorpus(), 0.1, 0);
  const auto tagger = trainTagger(train, ModelFamily::Hmm);
  EXPECT_GE(tokenAccuracy(tagger, test), 0.80);
}

}  // namespace
}  // namespace parsig
