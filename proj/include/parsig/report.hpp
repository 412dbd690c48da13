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

// JSON reports shared by the evaluation commands.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parsig/data.hpp"
#include "parsig/metrics.hpp"
#include "parsig/tagger.hpp"

namespace parsig {

/// Every evaluation command emits the same key set; sections that do not
/// apply are null.
struct EvalReport {
  std::optional<std::string> model;
  std::optional<std::size_t> tokens;
  std::optional<ErrorRates> rates;
  /// Rates as percentages (the default) or as ratios in [0, 1].
  bool percent = true;
  std::optional<double> lemmaAccuracy;
  std::optional<ConfusionMatrix> confusion;

  std::string toJson(int indent = 2) const;
};

/// Tags the gold corpus and tabulates the confusion matrix over the
/// default tags that occur in the gold or the predicted sequence.
EvalReport evaluatePos(const PosTagger& tagger, const Corpus& gold);

/// Pooled WER/CER over tokens whose gold transliteration is present.
EvalReport evaluateP2T(const std::vector<std::string>& gold, const std::vector<std::string>& predicted,
                       bool percent = true);

EvalReport evaluateLemma(const std::vector<std::string>& gold, const std::vector<std::string>& predicted);

/// The four corpus-summary rows.
std::string statsJson(const CorpusStats& stats, int indent = 2);

/// Per-point mean accuracies, fold scores and errors, and the chosen point.
std::string gridSearchJson(const GridSearchResult& result, ModelFamily family, int k, int indent = 2);

}  // namespace parsig
