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

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <cmath>
#include <limits>

namespace parsig {

template <class Scalar, int Rows = Eigen::Dynamic, int Cols = Eigen::Dynamic>
using Matrix = Eigen::Matrix<Scalar, Rows, Cols>;

template <class Scalar, int Rows = Eigen::Dynamic>
using Vector = Eigen::Matrix<Scalar, Rows, 1>;

template <class Scalar>
using RowMajorSparse = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

using MatrixXd = Matrix<double>;
using VectorXd = Vector<double>;

template <class Scalar>
constexpr Scalar kNegInf = -std::numeric_limits<Scalar>::infinity();

/// log(exp(a) + exp(b)) without overflow; -inf is the additive identity.
template <class Scalar>
Scalar logAddExp(Scalar a, Scalar b) {
  if (a == kNegInf<Scalar>) return b;
  if (b == kNegInf<Scalar>) return a;
  const Scalar hi = std::max(a, b);
  return hi + std::log1p(std::exp(-std::abs(a - b)));
}

template <class Derived>
typename Derived::Scalar logSumExp(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (x.size() == 0) return kNegInf<Scalar>;
  const Scalar hi = x.maxCoeff();
  if (hi == kNegInf<Scalar>) return hi;
  return hi + std::log((x.array() - hi).exp().sum());
}

/// Row-wise softmax, numerically stabilized by the row maximum.
template <class Derived>
Matrix<typename Derived::Scalar> softmaxRows(const Eigen::MatrixBase<Derived>& scores) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> out = scores.colwise() - scores.rowwise().maxCoeff();
  out = out.array().exp();
  out.array().colwise() /= out.rowwise().sum().array();
  return out;
}

template <class Scalar>
Scalar sigmoid(Scalar x) {
  if (x >= 0) return Scalar(1) / (Scalar(1) + std::exp(-x));
  const Scalar e = std::exp(x);
  return e / (Scalar(1) + e);
}

/// log(sigmoid(x)) computed without cancellation for large |x|.
template <class Scalar>
Scalar logSigmoid(Scalar x) {
  if (x >= 0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

}  // namespace parsig
