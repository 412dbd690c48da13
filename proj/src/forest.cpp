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

#include "parsig/forest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "json_util.hpp"
#include "parsig/error.hpp"
#include "parsig/linear.hpp"

namespace parsig {

double giniImpurity(std::span<const long> histogram) {
  const long n = std::accumulate(histogram.begin(), histogram.end(), 0L);
  if (n == 0) return 0.0;
  double sumSq = 0.0;
  for (const long c : histogram) sumSq += static_cast<double>(c) * static_cast<double>(c);
  return 1.0 - sumSq / (static_cast<double>(n) * static_cast<double>(n));
}

const DecisionTree::Node& DecisionTree::leaf(const std::vector<std::pair<std::size_t, double>>& row) const {
  const Node* node = &nodes.front();
  while (node->feature >= 0) {
    const auto f = static_cast<std::size_t>(node->feature);
    const auto it = std::lower_bound(row.begin(), row.end(), std::pair<std::size_t, double>{f, -INFINITY});
    const double v = (it != row.end() && it->first == f) ? it->second : 0.0;
    node = &nodes[static_cast<std::size_t>(v <= node->threshold ? node->left : node->right)];
  }
  return *node;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class TreeBuilder {
 public:
  TreeBuilder(const Eigen::SparseMatrix<double>& x, const std::vector<int>& y, std::size_t nClasses,
              const ForestParams& params, std::size_t maxFeatures)
      : x_(x), y_(y), nClasses_(nClasses), params_(params), maxFeatures_(maxFeatures),
        scratch_(static_cast<std::size_t>(x.rows()), 0.0) {}

  DecisionTree build(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto n = static_cast<std::size_t>(x_.rows());
    std::vector<int> samples(n);
    if (params_.bootstrap) {
      std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
      for (auto& s : samples) s = pick(rng);
    } else {
      std::iota(samples.begin(), samples.end(), 0);
    }
    std::vector<int> order(static_cast<std::size_t>(x_.cols()));
    std::iota(order.begin(), order.end(), 0);

    DecisionTree tree;
    struct Pending {
      std::size_t node;
      std::vector<int> samples;
    };
    std::vector<Pending> stack;
    tree.nodes.emplace_back();
    stack.push_back({0, std::move(samples)});
    while (!stack.empty()) {
      Pending job = std::move(stack.back());
      stack.pop_back();

      std::vector<long> hist(nClasses_, 0);
      for (const int s : job.samples) ++hist[static_cast<std::size_t>(y_[static_cast<std::size_t>(s)])];
      const auto m = static_cast<long>(job.samples.size());
      const bool pure = std::count_if(hist.begin(), hist.end(), [](long c) { return c > 0; }) <= 1;

      Split split;
      if (!pure && m >= params_.minSamplesSplit && m >= 2L * params_.minSamplesLeaf)
        split = bestSplit(job.samples, hist, order, rng);
      if (split.feature < 0) {
        tree.nodes[job.node].histogram = std::move(hist);
        continue;
      }

      std::vector<int> left, right;
      gather(split.feature);
      for (const int s : job.samples)
        (scratch_[static_cast<std::size_t>(s)] <= split.threshold ? left : right).push_back(s);
      release(split.feature);

      const std::size_t l = tree.nodes.size();
      tree.nodes.emplace_back();
      tree.nodes.emplace_back();
      auto& node = tree.nodes[job.node];
      node.feature = split.feature;
      node.threshold = split.threshold;
      node.left = static_cast<int>(l);
      node.right = static_cast<int>(l + 1);
      stack.push_back({l + 1, std::move(right)});
      stack.push_back({l, std::move(left)});
    }
    return tree;
  }

 private:
  struct Split {
    int feature = -1;
    double threshold = 0.0;
    double impurity = INFINITY;
  };

  void gather(int feature) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(x_, feature); it; ++it)
      scratch_[static_cast<std::size_t>(it.row())] = it.value();
  }
  void release(int feature) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(x_, feature); it; ++it)
      scratch_[static_cast<std::size_t>(it.row())] = 0.0;
  }

  // Candidate features are drawn without replacement until maxFeatures
  // non-constant ones have been evaluated or the pool is exhausted.
  Split bestSplit(const std::vector<int>& samples, const std::vector<long>& parentHist,
                  std::vector<int>& order, std::mt19937_64& rng) {
    Split best;
    const std::size_t nFeatures = order.size();
    const auto m = static_cast<long>(samples.size());
    std::size_t visited = 0;
    std::vector<std::pair<double, int>> values(samples.size());
    std::vector<long> leftHist(nClasses_);

    for (std::size_t k = 0; k < nFeatures && visited < maxFeatures_; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, nFeatures - 1);
      std::swap(order[k], order[pick(rng)]);
      const int f = order[k];

      gather(f);
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const int s = samples[i];
        values[i] = {scratch_[static_cast<std::size_t>(s)], y_[static_cast<std::size_t>(s)]};
      }
      release(f);
      std::sort(values.begin(), values.end());
      if (values.front().first == values.back().first) continue;
      ++visited;

      std::fill(leftHist.begin(), leftHist.end(), 0);
      double leftSq = 0.0;
      double rightSq = 0.0;
      for (const long c : parentHist) rightSq += static_cast<double>(c) * static_cast<double>(c);
      for (long i = 0; i + 1 < m; ++i) {
        const auto c = static_cast<std::size_t>(values[static_cast<std::size_t>(i)].second);
        const long lc = leftHist[c]++;
        const long rc = parentHist[c] - lc;
        leftSq += static_cast<double>(2 * lc + 1);
        rightSq -= static_cast<double>(2 * rc - 1);
        const long nl = i + 1;
        const long nr = m - nl;
        if (values[static_cast<std::size_t>(i)].first == values[static_cast<std::size_t>(i + 1)].first) continue;
        if (nl < params_.minSamplesLeaf || nr < params_.minSamplesLeaf) continue;
        // Weighted Gini: (nl * (1 - leftSq/nl^2) + nr * (1 - rightSq/nr^2)) / m
        const double impurity =
            (static_cast<double>(m) - leftSq / static_cast<double>(nl) - rightSq / static_cast<double>(nr)) /
            static_cast<double>(m);
        if (impurity < best.impurity) {
          best.feature = f;
          best.impurity = impurity;
          best.threshold = 0.5 * (values[static_cast<std::size_t>(i)].first +
                                  values[static_cast<std::size_t>(i + 1)].first);
          // The midpoint can round onto the upper value for adjacent doubles.
          if (best.threshold >= values[static_cast<std::size_t>(i + 1)].first)
            best.threshold = values[static_cast<std::size_t>(i)].first;
        }
      }
    }
    return best;
  }

  const Eigen::SparseMatrix<double>& x_;
  const std::vector<int>& y_;
  std::size_t nClasses_;
  const ForestParams& params_;
  std::size_t maxFeatures_;
  std::vector<double> scratch_;
};

}  // namespace

ForestModel trainForest(const std::vector<FeatureVector>& vectors, const std::vector<std::string>& labels,
                        const ForestParams& params, std::uint64_t seed, const TagSet& reference) {
  if (vectors.size() != labels.size()) throw InputError("feature vectors and labels differ in length");
  if (vectors.empty()) throw InputError("no training data for the forest");
  if (params.nTrees < 1) throw InputError("nTrees must be at least 1");
  if (params.minSamplesSplit < 2) throw InputError("minSamplesSplit must be at least 2");
  if (params.minSamplesLeaf < 1) throw InputError("minSamplesLeaf must be at least 1");
  if (params.maxFeatures < 0) throw InputError("maxFeatures must be non-negative");

  ForestModel model;
  model.classes = classesFor(labels, reference);
  model.features = FeatureSpace(vectors);
  model.params = params;
  model.seed = seed;

  const Eigen::SparseMatrix<double> x = model.features.vectorize(vectors);
  std::vector<int> y;
  y.reserve(labels.size());
  for (const auto& l : labels) y.push_back(static_cast<int>(*model.classes.index(l)));

  const std::size_t nFeatures = model.features.size();
  std::size_t maxFeatures = params.maxFeatures > 0
                                ? static_cast<std::size_t>(params.maxFeatures)
                                : static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(nFeatures))));
  maxFeatures = std::clamp<std::size_t>(maxFeatures, 1, std::max<std::size_t>(nFeatures, 1));

  const auto nTrees = static_cast<std::size_t>(params.nTrees);
  model.trees.resize(nTrees);
  unsigned workers = params.threads > 0 ? static_cast<unsigned>(params.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(nTrees));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    TreeBuilder builder(x, y, model.classes.size(), params, maxFeatures);
    for (std::size_t k = next++; k < nTrees; k = next++)
      model.trees[k] = builder.build(splitmix64(seed ^ splitmix64(k)));
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return model;
}

std::vector<int> forestVotes(const ForestModel& model, const FeatureVector& vector) {
  const auto row = model.features.sparseRow(vector);
  std::vector<int> votes(model.classes.size(), 0);
  for (const auto& tree : model.trees) {
    const auto& hist = tree.leaf(row).histogram;
    const auto best = std::max_element(hist.begin(), hist.end());  // first maximum
    ++votes[static_cast<std::size_t>(best - hist.begin())];
  }
  return votes;
}

std::string predictForest(const ForestModel& model, const FeatureVector& vector) {
  const auto votes = forestVotes(model, vector);
  const auto best = std::max_element(votes.begin(), votes.end());
  return model.classes[static_cast<std::size_t>(best - votes.begin())];
}

std::string serializeForest(const ForestModel& model) {
  using Json = nlohmann::ordered_json;
  Json j;
  j["format"] = "#forest-v1";
  j["seed"] = model.seed;
  j["params"] = {{"nTrees", model.params.nTrees},
                 {"criterion", "gini"},
                 {"minSamplesSplit", model.params.minSamplesSplit},
                 {"minSamplesLeaf", model.params.minSamplesLeaf},
                 {"maxFeatures", model.params.maxFeatures},
                 {"bootstrap", model.params.bootstrap}};
  j["classes"] = model.classes.tags();
  j["features"] = model.features.names();
  auto trees = Json::array();
  for (const auto& t : model.trees) {
    auto nodes = Json::array();
    for (const auto& n : t.nodes) {
      if (n.feature < 0)
        nodes.push_back(Json{{"hist", n.histogram}});
      else
        nodes.push_back(Json{{"feature", n.feature}, {"threshold", n.threshold}, {"left", n.left}, {"right", n.right}});
    }
    trees.push_back(std::move(nodes));
  }
  j["trees"] = std::move(trees);
  return j.dump() + "\n";
}

ForestModel parseForest(std::string_view text) {
  const auto j = jsonio::parseDocument(text, "#forest-v1");
  try {
    ForestModel m;
    m.seed = j.at("seed").get<std::uint64_t>();
    const auto& p = j.at("params");
    if (p.at("criterion").get<std::string>() != "gini") throw ResourceError("only the gini criterion is supported");
    m.params.nTrees = p.at("nTrees").get<int>();
    m.params.minSamplesSplit = p.at("minSamplesSplit").get<int>();
    m.params.minSamplesLeaf = p.at("minSamplesLeaf").get<int>();
    m.params.maxFeatures = p.at("maxFeatures").get<int>();
    m.params.bootstrap = p.at("bootstrap").get<bool>();
    m.classes = TagSet(j.at("classes").get<std::vector<std::string>>());
    m.features = FeatureSpace(j.at("features").get<std::vector<std::string>>());
    for (const auto& jt : j.at("trees")) {
      DecisionTree t;
      for (const auto& jn : jt) {
        DecisionTree::Node n;
        if (jn.contains("hist")) {
          n.histogram = jn.at("hist").get<std::vector<long>>();
          if (n.histogram.size() != m.classes.size()) throw ResourceError("leaf histogram size mismatch");
        } else {
          n.feature = jn.at("feature").get<int>();
          n.threshold = jn.at("threshold").get<double>();
          n.left = jn.at("left").get<int>();
          n.right = jn.at("right").get<int>();
        }
        t.nodes.push_back(std::move(n));
      }
      const auto size = static_cast<int>(t.nodes.size());
      if (size == 0) throw ResourceError("empty tree in forest model");
      for (const auto& n : t.nodes)
        if (n.feature >= 0 && (n.left <= 0 || n.left >= size || n.right <= 0 || n.right >= size ||
                               n.feature >= static_cast<int>(m.features.size())))
          throw ResourceError("forest node references out of range");
      m.trees.push_back(std::move(t));
    }
    if (m.trees.size() != static_cast<std::size_t>(m.params.nTrees))
      throw ResourceError("forest tree count does not match nTrees");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ResourceError(std::string("malformed forest model: ") + e.what());
  }
}

}  // namespace parsig
