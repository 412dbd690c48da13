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

#include "parsig/tagger.hpp"

#include <cmath>
#include <set>

#include "json_util.hpp"
#include "parsig/error.hpp"

namespace parsig {

std::string_view familyName(ModelFamily family) {
  switch (family) {
    case ModelFamily::Hmm: return "hmm";
    case ModelFamily::LogReg: return "logreg";
    case ModelFamily::Forest: return "forest";
  }
  return "";
}

ModelFamily parseFamily(std::string_view name) {
  if (name == "hmm") return ModelFamily::Hmm;
  if (name == "logreg") return ModelFamily::LogReg;
  if (name == "forest") return ModelFamily::Forest;
  throw InputError("unknown model family '" + std::string(name) + "' (expected hmm, logreg or forest)");
}

std::vector<std::string> tagSentence(const LinearModel& model, const std::vector<std::string>& words) {
  return greedyDecode(words, [&](const FeatureVector& v) { return predictLinear(model, v).first; });
}

std::vector<std::string> tagSentence(const ForestModel& model, const std::vector<std::string>& words) {
  return greedyDecode(words, [&](const FeatureVector& v) { return predictForest(model, v); });
}

const TagSet& PosTagger::tags() const {
  return std::visit(
      [](const auto& m) -> const TagSet& {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, HmmModel>)
          return m.tags;
        else
          return m.classes;
      },
      model_);
}

std::vector<std::string> PosTagger::tag(const std::vector<std::string>& words) const {
  if (words.empty()) return {};
  return std::visit(
      [&](const auto& m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, HmmModel>)
          return viterbiDecode(m, words);
        else
          return tagSentence(m, words);
      },
      model_);
}

std::string PosTagger::serialize() const {
  switch (family()) {
    case ModelFamily::Hmm: return serializeHmm(std::get<HmmModel>(model_));
    case ModelFamily::LogReg: return serializeLinear(std::get<LinearModel>(model_));
    case ModelFamily::Forest: return serializeForest(std::get<ForestModel>(model_));
  }
  return {};
}

PosTagger PosTagger::parse(std::string_view json) {
  std::string format;
  try {
    const auto j = nlohmann::json::parse(json);
    format = j.at("format").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ResourceError(std::string("unreadable POS model: ") + e.what());
  }
  if (format == "#hmm-v1") return PosTagger(parseHmm(json));
  if (format == "#linear-v1") return PosTagger(parseLinear(json));
  if (format == "#forest-v1") return PosTagger(parseForest(json));
  throw ResourceError("unknown POS model format '" + format + "'");
}

namespace {

void checkKeys(const ParamPoint& params, std::set<std::string> allowed, ModelFamily family) {
  for (const auto& [key, value] : params) {
    if (!allowed.contains(key))
      throw InputError("unknown " + std::string(familyName(family)) + " parameter '" + key + "'");
    if (!std::isfinite(value)) throw InputError("parameter '" + key + "' is not finite");
  }
}

double get(const ParamPoint& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

int getInt(const ParamPoint& params, const std::string& key, int fallback) {
  const double v = get(params, key, fallback);
  if (v != std::floor(v)) throw InputError("parameter '" + key + "' must be an integer");
  return static_cast<int>(v);
}

}  // namespace

PosTagger trainTagger(const Corpus& corpus, ModelFamily family, const ParamPoint& params, std::uint64_t seed,
                      const TagSet& reference) {
  switch (family) {
    case ModelFamily::Hmm: {
      checkKeys(params, {"alpha"}, family);
      const double alpha = get(params, "alpha", 0.001);
      if (!(alpha >= 0.0)) throw InputError("alpha must be non-negative");
      return PosTagger(trainHmm(corpus, alpha, reference));
    }
    case ModelFamily::LogReg: {
      checkKeys(params, {"l2", "maxEpochs", "learningRate", "tolerance"}, family);
      LogRegParams p;
      p.l2Strength = get(params, "l2", p.l2Strength);
      p.maxEpochs = getInt(params, "maxEpochs", p.maxEpochs);
      p.learningRate = get(params, "learningRate", p.learningRate);
      p.gradientTolerance = get(params, "tolerance", p.gradientTolerance);
      const auto data = trainingExamples(corpus);
      return PosTagger(trainLogReg(data.vectors, data.labels, p, seed, reference));
    }
    case ModelFamily::Forest: {
      checkKeys(params, {"nTrees", "minSamplesSplit", "minSamplesLeaf", "maxFeatures", "bootstrap", "threads"},
                family);
      ForestParams p;
      p.nTrees = getInt(params, "nTrees", p.nTrees);
      p.minSamplesSplit = getInt(params, "minSamplesSplit", p.minSamplesSplit);
      p.minSamplesLeaf = getInt(params, "minSamplesLeaf", p.minSamplesLeaf);
      p.maxFeatures = getInt(params, "maxFeatures", p.maxFeatures);
      p.bootstrap = get(params, "bootstrap", 1.0) != 0.0;
      p.threads = getInt(params, "threads", p.threads);
      const auto data = trainingExamples(corpus);
      return PosTagger(trainForest(data.vectors, data.labels, p, seed, reference));
    }
  }
  throw InputError("unknown model family");
}

double tokenAccuracy(const PosTagger& tagger, const Corpus& gold) {
  std::size_t correct = 0;
  std::size_t total = 0;
  for (const Sentence* s : gold.sentences()) {
    const auto predicted = tagger.tag(s->words());
    for (std::size_t i = 0; i < s->size(); ++i) {
      const auto& g = s->tokens[i].pos;
      if (!g) throw InputError("gold corpus token '" + s->tokens[i].text + "' has no POS tag");
      ++total;
      if (predicted[i] == *g) ++correct;
    }
  }
  if (total == 0) throw InputError("accuracy over an empty corpus");
  return static_cast<double>(correct) / static_cast<double>(total);
}

std::vector<ParamPoint> expandGrid(const std::map<std::string, std::vector<double>>& axes) {
  std::vector<ParamPoint> points{ParamPoint{}};
  for (const auto& [key, values] : axes) {
    if (values.empty()) throw InputError("grid axis '" + key + "' has no values");
    std::vector<ParamPoint> next;
    for (const auto& p : points)
      for (const double v : values) {
        auto q = p;
        q[key] = v;
        next.push_back(std::move(q));
      }
    points = std::move(next);
  }
  return points;
}

GridSearchResult gridSearch(const Corpus& corpus, ModelFamily family, const std::vector<ParamPoint>& grid, int k,
                            std::uint64_t seed) {
  if (grid.empty()) throw InputError("parameter grid is empty");
  const auto folds = kFolds(corpus, k, seed);

  GridSearchResult result;
  for (const auto& params : grid) {
    GridPoint point{params, 0.0, {}, std::nullopt};
    try {
      double sum = 0.0;
      for (const auto& fold : folds) {
        const auto tagger = trainTagger(fold.train, family, params, seed);
        point.foldAccuracies.push_back(tokenAccuracy(tagger, fold.validation));
        sum += point.foldAccuracies.back();
      }
      point.meanAccuracy = sum / static_cast<double>(folds.size());
    } catch (const InputError& e) {
      point.meanAccuracy = 0.0;
      point.foldAccuracies.clear();
      point.error = e.what();
    }
    result.table.push_back(std::move(point));
    if (result.table.back().meanAccuracy > result.table[result.bestIndex].meanAccuracy)
      result.bestIndex = result.table.size() - 1;
  }
  return result;
}

}  // namespace parsig
