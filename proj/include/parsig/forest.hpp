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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parsig/data.hpp"
#include "parsig/features.hpp"
#include "parsig/linalg.hpp"

namespace parsig {

struct ForestParams {
  int nTrees = 100;
  int minSamplesSplit = 2;
  int minSamplesLeaf = 1;
  /// Candidate features per split; 0 means floor(sqrt(F)).
  int maxFeatures = 0;
  bool bootstrap = true;
  /// Worker threads for tree construction; 0 means hardware concurrency.
  /// The forest does not depend on this value.
  int threads = 0;
};

/// Binary tree in a flat node array, root at index 0. Samples with
/// value <= threshold on `feature` go left.
struct DecisionTree {
  struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    std::vector<long> histogram;  // class counts of the training samples
  };
  std::vector<Node> nodes;

  /// Leaf reached by a sparse row given as ascending (column, value) pairs.
  const Node& leaf(const std::vector<std::pair<std::size_t, double>>& row) const;
};

struct ForestModel {
  TagSet classes;
  FeatureSpace features;
  ForestParams params;
  std::uint64_t seed = 0;
  std::vector<DecisionTree> trees;
};

/// 1 - sum_c p_c^2 over a class histogram; 0 for an empty histogram.
double giniImpurity(std::span<const long> histogram);

/// Bagged CART trees with Gini splits over a random candidate subset of
/// features per node. Tree k draws from its own stream derived from `seed`,
/// so the result is independent of thread scheduling.
ForestModel trainForest(const std::vector<FeatureVector>& vectors, const std::vector<std::string>& labels,
                        const ForestParams& params = {}, std::uint64_t seed = 0,
                        const TagSet& reference = TagSet::defaults());

/// One vote per tree, indexed like model.classes.
std::vector<int> forestVotes(const ForestModel& model, const FeatureVector& vector);
/// Majority vote; ties go to the class declared first.
std::string predictForest(const ForestModel& model, const FeatureVector& vector);

std::string serializeForest(const ForestModel& model);
ForestModel parseForest(std::string_view json);

}  // namespace parsig
