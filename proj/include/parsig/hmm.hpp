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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "parsig/data.hpp"
#include "parsig/linalg.hpp"

namespace parsig {

/// First-order HMM tagger with additive smoothing, all parameters in log
/// space.
///
/// transition is (|tags| + 1) x |tags|: row 0 is the virtual START state and
/// row p + 1 the previous tag p. emission is |tags| x (|vocabulary| + 1): the
/// last column is the shared slot for words unseen in training.
struct HmmModel {
  TagSet tags;
  double smoothing = 0.001;
  std::map<std::string, std::size_t, std::less<>> vocabulary;
  MatrixXd transition;
  MatrixXd emission;

  static constexpr std::size_t kStart = 0;

  std::size_t unknownColumn() const { return vocabulary.size(); }
  std::size_t emissionColumn(std::string_view word) const;

  /// Sum of transition and emission log-probabilities of a tag path.
  double pathScore(const std::vector<std::string>& words, const std::vector<std::size_t>& path) const;
};

/// Counts with additive smoothing `alpha`:
///   P(t | p) = (c(p, t) + alpha) / (c(p) + alpha |tags|)
///   P(w | t) = (c(t, w) + alpha) / (c(t) + alpha (|vocab| + 1))
/// A row with neither counts nor smoothing mass is uniform. The tag set is
/// `reference` restricted to tags that occur in `corpus`.
HmmModel trainHmm(const Corpus& corpus, double alpha = 0.001,
                  const TagSet& reference = TagSet::defaults());

/// Most probable tag path. Ties resolve to the tag declared first.
std::vector<std::size_t> viterbiPath(const HmmModel& model, const std::vector<std::string>& words);
std::vector<std::string> viterbiDecode(const HmmModel& model, const std::vector<std::string>& words);

std::string serializeHmm(const HmmModel& model);
HmmModel parseHmm(std::string_view json);

}  // namespace parsig
