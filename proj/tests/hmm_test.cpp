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
#include "parsig/hmm.hpp"
#include "test_support.hpp"

namespace parsig {
namespace {

const Corpus kTiny = parseCorpus("a\t_\tN\nb\t_\tV\n");

double prob(const MatrixXd& m, std::size_t r, std::size_t c) {
  return std::exp(m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
}

TEST(TrainHmm, UnsmoothedCounts) {
  const auto m = trainHmm(kTiny, 0.0);
  ASSERT_EQ(m.tags.tags(), (std::vector<std::string>{"N", "V"}));
  const auto n = *m.tags.index("N");
  const auto v = *m.tags.index("V");
  EXPECT_DOUBLE_EQ(prob(m.transition, n + 1, v), 1.0);
  EXPECT_DOUBLE_EQ(prob(m.emission, n, m.emissionColumn("a")), 1.0);
  EXPECT_DOUBLE_EQ(prob(m.transition, HmmModel::kStart, n), 1.0);
}

TEST(TrainHmm, LaplaceFormula) {
  const double alpha = 0.001;
  const auto m = trainHmm(kTiny, alpha);
  const auto n = *m.tags.index("N");
  const auto v = *m.tags.index("V");
  // count(N, V) = 1, count(N) = 1, |tags| = 2.
  EXPECT_NEAR(prob(m.transition, n + 1, v), (1 + alpha) / (1 + 2 * alpha), 1e-15);
  EXPECT_NEAR(prob(m.transition, n + 1, v), 1.001 / 1.002, 1e-15);
  // count(N, a) = 1, count(N) = 1, |vocab| + 1 = 3.
  EXPECT_NEAR(prob(m.emission, n, m.emissionColumn("a")), (1 + alpha) / (1 + 3 * alpha), 1e-15);
  EXPECT_NEAR(prob(m.emission, n, m.unknownColumn()), alpha / (1 + 3 * alpha), 1e-15);
}

TEST(TrainHmm, RowsAreDistributions) {
  const auto corpus = parseCorpus(readTextFile(testing::resource("corpus/synthetic.tsv")));
  for (const double alpha : {0.0, 0.001, 1.0}) {
    const auto m = trainHmm(corpus, alpha);
    for (Eigen::Index r = 0; r < m.transition.rows(); ++r)
      EXPECT_NEAR(m.transition.row(r).array().exp().sum(), 1.0, 1e-9);
    for (Eigen::Index r = 0; r < m.emission.rows(); ++r)
      EXPECT_NEAR(m.emission.row(r).array().exp().sum(), 1.0, 1e-9);
  }
}

TEST(TrainHmm, UnannotatedTokenIsError) {
  EXPECT_THROW(trainHmm(parseCorpus("a\t_\tN\nb\n")), InputError);
}

TEST(Viterbi, SingleWord) {
  const auto m = trainHmm(parseCorpus("a\t_\tN\n"));
  EXPECT_EQ(viterbiDecode(m, {"a"}), std::vector<std::string>{"N"});
}

TEST(Viterbi, MatchesBruteForce) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t tags = 1 + rng() % 5;
    const std::size_t vocab = 1 + rng() % 4;
    const auto m = testing::randomHmm(rng, tags, vocab);
    std::vector<std::string> words(1 + rng() % 6);
    for (auto& w : words) w = "w" + std::to_string(rng() % (vocab + 1));  // may be unknown
    const auto path = viterbiPath(m, words);
    ASSERT_EQ(path.size(), words.size());
    EXPECT_NEAR(m.pathScore(words, path), testing::bruteForceBestScore(m, words), 1e-9);
  }
}

TEST(Viterbi, TiesGoToEarlierTag) {
  HmmModel m;
  m.tags = TagSet({"A", "B"});
  m.vocabulary["x"] = 0;
  m.transition = MatrixXd::Constant(3, 2, std::log(0.5));
  m.emission = MatrixXd::Constant(2, 2, std::log(0.5));
  EXPECT_EQ(viterbiDecode(m, {"x", "x"}), (std::vector<std::string>{"A", "A"}));
}

TEST(Hmm, SerializationRoundTrip) {
  const auto m = trainHmm(parseCorpus(readTextFile(testing::resource("corpus/demo_snippet.tsv"))), 0.0);
  const auto text = serializeHmm(m);
  const auto back = parseHmm(text);
  EXPECT_EQ(serializeHmm(back), text);
  EXPECT_EQ(viterbiDecode(back, testing::kExampleWords), testing::kExamplePos);
  EXPECT_THROW(parseHmm(R"({"format": "#linear-v1"})"), ResourceError);
}

}  // namespace
}  // namespace parsig
