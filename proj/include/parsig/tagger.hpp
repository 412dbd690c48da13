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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parsig/data.hpp"
#include "parsig/features.hpp"
#include "parsig/forest.hpp"
#include "parsig/hmm.hpp"
#include "parsig/linear.hpp"

namespace parsig {

enum class ModelFamily { Hmm, LogReg, Forest };

/// "hmm", "logreg" or "forest".
std::string_view familyName(ModelFamily family);
ModelFamily parseFamily(std::string_view name);

/// Greedy left-to-right decoding: the prev_tag feature at position i is the
/// prediction made at i - 1, and kStartTag at position 0.
template <class Predict>
std::vector<std::string> greedyDecode(const std::vector<std::string>& words, Predict&& predict) {
  std::vector<std::string> tags;
  tags.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string_view prev = i == 0 ? kStartTag : std::string_view(tags.back());
    tags.push_back(predict(extractFeatures(words, i, prev)));
  }
  return tags;
}

std::vector<std::string> tagSentence(const LinearModel& model, const std::vector<std::string>& words);
std::vector<std::string> tagSentence(const ForestModel& model, const std::vector<std::string>& words);

/// Any of the three trained taggers behind one decode interface.
class PosTagger {
 public:
  using Model = std::variant<HmmModel, LinearModel, ForestModel>;

  explicit PosTagger(Model model) : model_(std::move(model)) {}

  ModelFamily family() const { return static_cast<ModelFamily>(model_.index()); }
  const Model& model() const { return model_; }
  const TagSet& tags() const;

  std::vector<std::string> tag(const std::vector<std::string>& words) const;

  std::string serialize() const;
  /// Dispatches on the document's "format" field.
  static PosTagger parse(std::string_view json);

 private:
  Model model_;
};

/// Hyperparameters by name. Recognized keys:
///   hmm:    alpha
///   logreg: l2, maxEpochs, learningRate, tolerance
///   forest: nTrees, minSamplesSplit, minSamplesLeaf, maxFeatures, bootstrap
/// Missing keys take the library defaults; unknown keys are an InputError.
using ParamPoint = std::map<std::string, double>;

PosTagger trainTagger(const Corpus& corpus, ModelFamily family, const ParamPoint& params = {},
                      std::uint64_t seed = 0, const TagSet& reference = TagSet::defaults());

/// Fraction of tokens whose predicted tag equals the gold tag.
double tokenAccuracy(const PosTagger& tagger, const Corpus& gold);

/// Cartesian product of per-key value lists; keys vary slowest-first in
/// map order.
std::vector<ParamPoint> expandGrid(const std::map<std::string, std::vector<double>>& axes);

struct GridPoint {
  ParamPoint params;
  double meanAccuracy = 0.0;
  std::vector<double> foldAccuracies;
  std::optional<std::string> error;
};

struct GridSearchResult {
  std::size_t bestIndex = 0;
  std::vector<GridPoint> table;

  const ParamPoint& best() const { return table[bestIndex].params; }
};

/// Mean token accuracy over the same k folds for every grid point. The best
/// point has the highest mean; ties go to the earlier point. A point whose
/// training throws scores 0 and carries the error message.
GridSearchResult gridSearch(const Corpus& corpus, ModelFamily family, const std::vector<ParamPoint>& grid,
                            int k = 10, std::uint64_t seed = 0);

}  // namespace parsig
