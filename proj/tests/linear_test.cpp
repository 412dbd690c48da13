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

#include <random>

#include "parsig/error.hpp"
#include "parsig/features.hpp"
#include "parsig/linear.hpp"
#include "test_support.hpp"

namespace parsig {
namespace {

FeatureVector point(double x, double y) {
  FeatureVector v;
  v.values["x"] = x;
  v.values["y"] = y;
  return v;
}

TEST(Features, LastTokenOfExample) {
  const auto f = extractFeatures(testing::kExampleWords, 13, "ADV");
  EXPECT_EQ(f.categorical("word"), "bar");
  EXPECT_DOUBLE_EQ(f.numeric("is_last"), 1.0);
  EXPECT_DOUBLE_EQ(f.numeric("is_first"), 0.0);
  EXPECT_EQ(f.categorical("suffix1"), "r");
  EXPECT_EQ(f.categorical("last2"), "ar");
  EXPECT_EQ(f.categorical("first2"), "ba");
  EXPECT_EQ(f.categorical("prefix1"), "b");
  EXPECT_EQ(f.categorical("prev_tag"), "ADV");
  EXPECT_EQ(f.categorical("prev_word"), "ma");
  EXPECT_EQ(f.categorical("next_word"), std::string(kSentenceEnd));
  EXPECT_DOUBLE_EQ(f.numeric("word_len"), 3.0);
}

TEST(Features, SingleTokenAndIha) {
  const std::vector<std::string> one = {"xwadīhā"};
  const auto f = extractFeatures(one, 0, kStartTag);
  EXPECT_DOUBLE_EQ(f.numeric("is_first"), 1.0);
  EXPECT_DOUBLE_EQ(f.numeric("is_last"), 1.0);
  EXPECT_EQ(f.categorical("prev_word"), std::string(kSentenceStart));
  EXPECT_EQ(f.categorical("next_word"), std::string(kSentenceEnd));
  EXPECT_EQ(f.categorical("prev_tag"), std::string(kStartTag));
  EXPECT_DOUBLE_EQ(f.numeric("ends_iha"), 1.0);
  EXPECT_EQ(f.categorical("last2"), "hā");  // code points, not bytes
  EXPECT_DOUBLE_EQ(f.numeric("word_len"), 7.0);

  const std::vector<std::string> shortWord = {"ō"};
  const auto g = extractFeatures(shortWord, 0, kStartTag);
  EXPECT_EQ(g.categorical("first2"), "ō");
  EXPECT_EQ(g.categorical("last2"), "ō");
  EXPECT_DOUBLE_EQ(g.numeric("ends_iha"), 0.0);
}

TEST(Features, ExactlyOneWordFeature) {
  const auto f = extractFeatures(testing::kExampleWords, 4, "V");
  int words = 0;
  for (const auto& [name, value] : f.values) words += name.starts_with("word=");
  EXPECT_EQ(words, 1);
}

TEST(LogReg, SeparablePointsWithoutPenalty) {
  const std::vector<FeatureVector> x = {point(1, 0), point(0, 1)};
  const std::vector<std::string> y = {"N", "V"};
  LogRegParams p;
  p.l2Strength = 0.0;
  p.maxEpochs = 2000;
  const auto m = trainLogReg(x, y, p);
  EXPECT_EQ(predictLinear(m, x[0]).first, "N");
  EXPECT_EQ(predictLinear(m, x[1]).first, "V");
}

TEST(LogReg, SingleClassIsError) {
  EXPECT_THROW(trainLogReg({point(1, 0), point(0, 1)}, {"N", "N"}), InputError);
}

TEST(LogReg, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng() % 5);
    const Eigen::Index f = 2 + static_cast<Eigen::Index>(rng() % 4);
    const Eigen::Index c = 2 + static_cast<Eigen::Index>(rng() % 3);
    MatrixXd x(n, f), w(c, f);
    VectorXd b(c);
    for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = g(rng);
    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = g(rng);
    for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = g(rng);
    std::vector<Eigen::Index> y(static_cast<std::size_t>(n));
    for (auto& label : y) label = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(c));
    const double l2 = 0.5;

    MatrixXd gw;
    VectorXd gb;
    logRegGradient<MatrixXd, double>(x, y, w, b, l2, gw, gb);
    const double eps = 1e-5;
    MatrixXd nw(c, f);
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      MatrixXd wp = w, wm = w;
      wp.data()[i] += eps;
      wm.data()[i] -= eps;
      nw.data()[i] = (logRegObjective<MatrixXd, double>(x, y, wp, b, l2) -
                      logRegObjective<MatrixXd, double>(x, y, wm, b, l2)) / (2 * eps);
    }
    VectorXd nb(c);
    for (Eigen::Index i = 0; i < c; ++i) {
      VectorXd bp = b, bm = b;
      bp(i) += eps;
      bm(i) -= eps;
      nb(i) = (logRegObjective<MatrixXd, double>(x, y, w, bp, l2) -
               logRegObjective<MatrixXd, double>(x, y, w, bm, l2)) / (2 * eps);
    }
    const double errW = (gw - nw).norm() / std::max(1e-8, gw.norm() + nw.norm());
    const double errB = (gb - nb).norm() / std::max(1e-8, gb.norm() + nb.norm());
    EXPECT_LT(errW, 1e-5);
    EXPECT_LT(errB, 1e-5);
  }
}

TEST(LogReg, LossNeverIncreases) {
  const auto corpus = parseCorpus(readTextFile(testing::resource("corpus/synthetic.tsv")));
  const auto data = trainingExamples(corpus);
  LogRegTrace trace;
  LogRegParams p;
  p.maxEpochs = 100;
  trainLogReg(data.vectors, data.labels, p, 0, TagSet::defaults(), &trace);
  ASSERT_GT(trace.losses.size(), 1u);
  for (std::size_t i = 1; i < trace.losses.size(); ++i) EXPECT_LE(trace.losses[i], trace.losses[i - 1]);
}

TEST(PredictLinear, ZeroWeightsUniform) {
  LinearModel m;
  m.classes = TagSet({"A", "B", "C"});
  m.features = FeatureSpace(std::vector<std::string>{"x"});
  m.weights = MatrixXd::Zero(3, 1);
  m.bias = VectorXd::Zero(3);
  const auto [tag, probs] = predictLinear(m, point(1, 0));
  EXPECT_EQ(tag, "A");  // all tied
  for (Eigen::Index i = 0; i < 3; ++i) EXPECT_NEAR(probs(i), 1.0 / 3.0, 1e-12);
}

TEST(PredictLinear, ProbabilitiesAndBiasMonotonicity) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g(0.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    LinearModel m;
    m.classes = TagSet({"A", "B", "C", "D"});
    m.features = FeatureSpace(std::vector<std::string>{"x", "y"});
    m.weights = MatrixXd(4, 2);
    m.bias = VectorXd(4);
    for (Eigen::Index i = 0; i < 8; ++i) m.weights.data()[i] = g(rng);
    for (Eigen::Index i = 0; i < 4; ++i) m.bias(i) = g(rng);
    auto v = point(g(rng), g(rng));
    v.values["unseen"] = 5.0;  // ignored
    const auto before = predictLinear(m, v).second;
    EXPECT_NEAR(before.sum(), 1.0, 1e-9);
    const auto k = static_cast<Eigen::Index>(rng() % 4);
    m.bias(k) += 1.0;
    EXPECT_GT(predictLinear(m, v).second(k), before(k));
  }
}

TEST(LogReg, SerializationRoundTrip) {
  const auto data = trainingExamples(parseCorpus(readTextFile(testing::resource("corpus/demo_snippet.tsv"))));
  const auto m = trainLogReg(data.vectors, data.labels);
  const auto text = serializeLinear(m);
  EXPECT_EQ(serializeLinear(parseLinear(text)), text);
}

}  // namespace
}  // namespace parsig
