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

#include "parsig/linear.hpp"

#include <cmath>
#include <set>

#include "json_util.hpp"
#include "parsig/error.hpp"

namespace parsig {

TagSet classesFor(const std::vector<std::string>& labels, const TagSet& reference) {
  std::vector<bool> used(reference.size(), false);
  for (const auto& l : labels) {
    const auto i = reference.index(l);
    if (!i) throw InputError("label '" + l + "' is not in the tag set");
    used[*i] = true;
  }
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < reference.size(); ++i)
    if (used[i]) kept.push_back(reference[i]);
  if (kept.empty()) throw InputError("no training labels");
  return TagSet(std::move(kept));
}

LinearModel trainLogReg(const std::vector<FeatureVector>& vectors, const std::vector<std::string>& labels,
                        const LogRegParams& params, std::uint64_t /*seed*/, const TagSet& reference,
                        LogRegTrace* trace) {
  if (vectors.size() != labels.size()) throw InputError("feature vectors and labels differ in length");
  if (!(params.l2Strength >= 0.0)) throw InputError("l2 strength must be non-negative");
  if (!(params.learningRate > 0.0)) throw InputError("learning rate must be positive");

  LinearModel model;
  model.classes = classesFor(labels, reference);
  if (model.classes.size() < 2)
    throw InputError("logistic regression needs at least two distinct labels");
  model.features = FeatureSpace(vectors);
  model.l2Strength = params.l2Strength;

  const auto x = model.features.vectorize(vectors);
  std::vector<Eigen::Index> y;
  y.reserve(labels.size());
  for (const auto& l : labels) y.push_back(static_cast<Eigen::Index>(*model.classes.index(l)));

  const auto nClasses = static_cast<Eigen::Index>(model.classes.size());
  MatrixXd w = MatrixXd::Zero(nClasses, x.cols());
  VectorXd b = VectorXd::Zero(nClasses);
  const double l2 = params.l2Strength;

  double loss = logRegObjective(x, y, w, b, l2);
  LogRegTrace local;
  local.losses.push_back(loss);
  double rate = params.learningRate;
  MatrixXd gw;
  VectorXd gb;
  for (int epoch = 0; epoch < params.maxEpochs; ++epoch) {
    logRegGradient(x, y, w, b, l2, gw, gb);
    local.gradientNorm = std::sqrt(gw.squaredNorm() + gb.squaredNorm());
    if (local.gradientNorm < params.gradientTolerance) {
      local.converged = true;
      break;
    }
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving) {
      MatrixXd wNext = w - rate * gw;
      VectorXd bNext = b - rate * gb;
      const double next = logRegObjective(x, y, wNext, bNext, l2);
      if (next < loss) {
        w = std::move(wNext);
        b = std::move(bNext);
        loss = next;
        accepted = true;
        break;
      }
      rate /= 2.0;
    }
    if (!accepted) break;  // no representable decrease left along -grad
    local.losses.push_back(loss);
    rate *= 2.0;
  }
  if (!local.converged) {
    logRegGradient(x, y, w, b, l2, gw, gb);
    local.gradientNorm = std::sqrt(gw.squaredNorm() + gb.squaredNorm());
    local.converged = local.gradientNorm < params.gradientTolerance;
  }
  if (!w.allFinite() || !b.allFinite()) throw InputError("logistic regression diverged");

  model.weights = std::move(w);
  model.bias = std::move(b);
  if (trace) *trace = std::move(local);
  return model;
}

std::pair<std::string, VectorXd> predictLinear(const LinearModel& model, const FeatureVector& vector) {
  VectorXd scores = model.bias;
  for (const auto& [col, value] : model.features.sparseRow(vector))
    scores += value * model.weights.col(static_cast<Eigen::Index>(col));
  const double shift = scores.maxCoeff();
  VectorXd probs = (scores.array() - shift).exp();
  probs /= probs.sum();

  Eigen::Index best = 0;
  for (Eigen::Index c = 1; c < scores.size(); ++c)
    if (scores(c) > scores(best)) best = c;
  return {model.classes[static_cast<std::size_t>(best)], probs};
}

std::string serializeLinear(const LinearModel& model) {
  nlohmann::ordered_json j;
  j["format"] = "#linear-v1";
  j["l2Strength"] = model.l2Strength;
  j["classes"] = model.classes.tags();
  j["features"] = model.features.names();
  j["bias"] = jsonio::vectorToJson<nlohmann::ordered_json>(model.bias);
  j["weights"] = jsonio::matrixToJson(model.weights);
  return j.dump(1) + "\n";
}

LinearModel parseLinear(std::string_view text) {
  const auto j = jsonio::parseDocument(text, "#linear-v1");
  try {
    LinearModel m;
    m.l2Strength = j.at("l2Strength").get<double>();
    m.classes = TagSet(j.at("classes").get<std::vector<std::string>>());
    m.features = FeatureSpace(j.at("features").get<std::vector<std::string>>());
    const auto bias = j.at("bias").get<std::vector<double>>();
    m.bias = Eigen::Map<const VectorXd>(bias.data(), static_cast<Eigen::Index>(bias.size()));
    m.weights = jsonio::matrixFromJson(j.at("weights"));
    const auto nClasses = static_cast<Eigen::Index>(m.classes.size());
    if (m.bias.size() != nClasses || m.weights.rows() != nClasses ||
        (m.weights.rows() > 0 && m.weights.cols() != static_cast<Eigen::Index>(m.features.size())))
      throw ResourceError("linear model shapes do not match classes/features");
    if (m.weights.cols() == 0) m.weights.resize(nClasses, 0);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ResourceError(std::string("malformed linear model: ") + e.what());
  }
}

}  // namespace parsig
