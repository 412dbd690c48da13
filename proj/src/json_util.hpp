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

// Shared helpers for the JSON model documents. Not installed.

#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "parsig/error.hpp"
#include "parsig/linalg.hpp"

namespace parsig::jsonio {

/// Rows of numbers; -inf (a zero probability in log space) is written as
/// null because JSON has no infinities.
template <class Derived>
nlohmann::ordered_json matrixToJson(const Eigen::MatrixBase<Derived>& m) {
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double v = m(r, c);
      if (std::isfinite(v)) {
        row.push_back(v);
      } else if (v == kNegInf<double>) {
        row.push_back(nullptr);
      } else {
        throw InputError("cannot persist a non-finite model parameter");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Json>
MatrixXd matrixFromJson(const Json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.at(0).size());
  MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<Eigen::Index>(row.size()) != cols) throw ResourceError("ragged matrix in model file");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& v = row.at(static_cast<std::size_t>(c));
      m(r, c) = v.is_null() ? kNegInf<double> : v.template get<double>();
    }
  }
  return m;
}

template <class Json, class Derived>
Json vectorToJson(const Eigen::MatrixBase<Derived>& v) {
  auto out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(static_cast<double>(v(i)));
  return out;
}

inline nlohmann::ordered_json parseDocument(std::string_view text, std::string_view format) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ResourceError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format") || !j["format"].is_string())
    throw ResourceError("model file has no format tag");
  if (j["format"].get<std::string>() != format)
    throw ResourceError("expected a '" + std::string(format) + "' model, got '" +
                        j["format"].get<std::string>() + "'");
  return j;
}

}  // namespace parsig::jsonio
