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

// Multinomial logistic regression over one-hot token features.
//
// Objective, with n training rows:
//
//   J(W, b) = (1/n) * [ sum_i -log softmax(W x_i + b)[y_i] + (l2/2) ||W||^2 ]
//
// which is the usual C-parameterized objective divided by C n, so
// l2 = 1/C. The intercept is not penalized.

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

struct LinearModel {
  TagSet classes;
  FeatureSpace features;
  MatrixXd weights;  // classes x features
  VectorXd bias;     // classes
  double l2Strength = 1.0;
};

struct LogRegParams {
  double l2Strength = 1.0;
  int maxEpochs = 500;
  double learningRate = 1.0;
  double gradientTolerance = 1e-6;
};

struct LogRegTrace {
  /// Objective before the first step and after every accepted step.
  std::vector<double> losses;
  double gradientNorm = 0.0;
  bool converged = false;
};

/// Class scores W x + b for every row of `x`.
template <class XType, class Scalar>
Matrix<Scalar> classScores(const XType& x, const Matrix<Scalar>& weights, const Vector<Scalar>& bias) {
  Matrix<Scalar> scores = x * weights.transpose();
  scores.rowwise() += bias.transpose();
  return scores;
}

template <class XType, class Scalar>
Scalar logRegObjective(const XType& x, std::span<const Eigen::Index> labels,
                       const Matrix<Scalar>& weights, const Vector<Scalar>& bias, Scalar l2) {
  const Matrix<Scalar> scores = classScores(x, weights, bias);
  Scalar loss = 0;
  for (Eigen::Index i = 0; i < scores.rows(); ++i)
    loss += logSumExp(scores.row(i)) - scores(i, labels[static_cast<std::size_t>(i)]);
  loss += l2 / Scalar(2) * weights.squaredNorm();
  return loss / static_cast<Scalar>(scores.rows());
}

template <class XType, class Scalar>
void logRegGradient(const XType& x, std::span<const Eigen::Index> labels,
                    const Matrix<Scalar>& weights, const Vector<Scalar>& bias, Scalar l2,
                    Matrix<Scalar>& gradWeights, Vector<Scalar>& gradBias) {
  Matrix<Scalar> residual = softmaxRows(classScores(x, weights, bias));
  for (Eigen::Index i = 0; i < residual.rows(); ++i) residual(i, labels[static_cast<std::size_t>(i)]) -= 1;
  const auto n = static_cast<Scalar>(residual.rows());
  gradWeights = (residual.transpose() * x + l2 * weights) / n;
  gradBias = residual.colwise().sum().transpose() / n;
}

/// Full-batch gradient descent with step halving whenever a step fails to
/// decrease the objective. Weights start at zero, so the result does not
/// depend on `seed`; it is accepted for interface symmetry with the forest.
LinearModel trainLogReg(const std::vector<FeatureVector>& vectors, const std::vector<std::string>& labels,
                        const LogRegParams& params = {}, std::uint64_t seed = 0,
                        const TagSet& reference = TagSet::defaults(), LogRegTrace* trace = nullptr);

/// Arg-max tag (ties to the class declared first) and the softmax
/// distribution over model.classes. Unknown feature names are ignored.
std::pair<std::string, VectorXd> predictLinear(const LinearModel& model, const FeatureVector& vector);

std::string serializeLinear(const LinearModel& model);
LinearModel parseLinear(std::string_view json);

/// Classes of `reference` that occur in `labels`, in reference order. Throws
/// on labels outside the reference set.
TagSet classesFor(const std::vector<std::string>& labels, const TagSet& reference);

}  // namespace parsig
