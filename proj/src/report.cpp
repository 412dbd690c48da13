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

#include "parsig/report.hpp"

#include <json.hpp>

#include <set>

#include "parsig/error.hpp"

namespace parsig {

namespace {

using Json = nlohmann::ordered_json;

Json optionalNumber(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json scoresJson(const ClassScores& s) {
  return Json{{"ACC", optionalNumber(s.acc)},
              {"AUC", optionalNumber(s.auc)},
              {"F1", optionalNumber(s.f1)},
              {"Precision", optionalNumber(s.precision)},
              {"Recall", optionalNumber(s.recall)}};
}

Json editJson(const EditSummary& e) {
  return Json{{"substitutions", e.substitutions},
              {"deletions", e.deletions},
              {"insertions", e.insertions},
              {"referenceLength", e.referenceLength}};
}

}  // namespace

std::string EvalReport::toJson(int indent) const {
  Json j;
  j["model"] = model ? Json(*model) : Json(nullptr);
  j["tokens"] = tokens ? Json(*tokens) : Json(nullptr);
  const double scale = percent ? 100.0 : 1.0;
  j["wer"] = rates ? Json(rates->wer / 100.0 * scale) : Json(nullptr);
  j["cer"] = rates ? Json(rates->cer / 100.0 * scale) : Json(nullptr);
  j["lemmaAccuracy"] = optionalNumber(lemmaAccuracy);

  if (confusion) {
    const auto m = classMetrics(*confusion);
    j["accuracy"] = m.overallAccuracy;
    Json per = Json::object();
    for (std::size_t i = 0; i < m.classes.size(); ++i) per[m.classes[i]] = scoresJson(m.perClass[i]);
    j["perClass"] = std::move(per);
    j["macro"] = scoresJson(m.macro);
    j["micro"] = scoresJson(m.micro);
    // One row of the model comparison table: macro averages, except
    // precision, which is micro because macro precision skips classes that
    // were never predicted.
    j["summary"] = Json{{"Accuracy", optionalNumber(m.macro.acc)},
                        {"F1", optionalNumber(m.macro.f1)},
                        {"Recall", optionalNumber(m.macro.recall)},
                        {"Precision", optionalNumber(m.micro.precision)}};
    Json rows = Json::array();
    const auto& c = confusion->counts();
    for (Eigen::Index r = 0; r < c.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index col = 0; col < c.cols(); ++col) row.push_back(c(r, col));
      rows.push_back(std::move(row));
    }
    j["confusion"] = Json{{"labels", confusion->classes().tags()}, {"matrix", std::move(rows)}};
  } else {
    for (const char* k : {"accuracy", "perClass", "macro", "micro", "summary", "confusion"}) j[k] = nullptr;
  }

  if (rates) j["counts"] = Json{{"words", editJson(rates->words)}, {"chars", editJson(rates->chars)}};
  else j["counts"] = nullptr;

  Json notes = Json::array();
  if (rates) {
    notes.push_back("error rate = (S + D + I) / N with N the reference length, pooled over all pairs");
    notes.push_back("reading N as the combined length of both strings would halve every rate");
    notes.push_back(percent ? "wer and cer are percentages" : "wer and cer are ratios");
    notes.push_back("cer counts Unicode code points, spaces included");
  }
  if (confusion) {
    notes.push_back("confusion rows are gold tags, columns predictions");
    notes.push_back("null marks an undefined ratio; macro averages skip undefined classes");
    notes.push_back("AUC = (recall + specificity) / 2 from one-vs-rest counts");
  }
  j["notes"] = std::move(notes);
  return j.dump(indent) + "\n";
}

EvalReport evaluatePos(const PosTagger& tagger, const Corpus& gold) {
  std::vector<std::string> goldTags;
  std::vector<std::string> predicted;
  for (const Sentence* s : gold.sentences()) {
    const auto tags = tagger.tag(s->words());
    for (std::size_t i = 0; i < s->size(); ++i) {
      const auto& g = s->tokens[i].pos;
      if (!g) throw InputError("gold token '" + s->tokens[i].text + "' has no POS tag");
      goldTags.push_back(*g);
      predicted.push_back(tags[i]);
    }
  }
  if (goldTags.empty()) throw InputError("evaluation corpus has no tokens");

  const std::set<std::string> seen = [&] {
    std::set<std::string> s(goldTags.begin(), goldTags.end());
    s.insert(predicted.begin(), predicted.end());
    return s;
  }();
  std::vector<std::string> labels;
  for (const auto& t : TagSet::defaults().tags())
    if (seen.contains(t)) labels.push_back(t);
  for (const auto& t : seen)
    if (!TagSet::defaults().contains(t)) labels.push_back(t);

  ConfusionMatrix cm{TagSet(labels)};
  for (std::size_t i = 0; i < goldTags.size(); ++i) cm.add(goldTags[i], predicted[i]);

  EvalReport r;
  r.model = std::string(familyName(tagger.family()));
  r.tokens = goldTags.size();
  r.confusion = std::move(cm);
  return r;
}

EvalReport evaluateP2T(const std::vector<std::string>& gold, const std::vector<std::string>& predicted,
                       bool percent) {
  EvalReport r;
  r.model = "rule-based";
  r.tokens = gold.size();
  r.rates = corpusErrorRates(gold, predicted);
  r.percent = percent;
  return r;
}

EvalReport evaluateLemma(const std::vector<std::string>& gold, const std::vector<std::string>& predicted) {
  EvalReport r;
  r.model = "lexicon+rules";
  r.tokens = gold.size();
  r.lemmaAccuracy = lemmaAccuracy(gold, predicted);
  return r;
}

std::string statsJson(const CorpusStats& stats, int indent) {
  Json j{{"Total Documents", stats.documents},
         {"Total Words", stats.words},
         {"Unique Tokens", stats.uniqueTokens},
         {"Distinct Lemmas", stats.distinctLemmas}};
  return j.dump(indent) + "\n";
}

std::string gridSearchJson(const GridSearchResult& result, ModelFamily family, int k, int indent) {
  Json table = Json::array();
  for (const auto& p : result.table) {
    Json row;
    row["params"] = p.params;
    row["meanAccuracy"] = p.meanAccuracy;
    row["foldAccuracies"] = p.foldAccuracies;
    row["error"] = p.error ? Json(*p.error) : Json(nullptr);
    table.push_back(std::move(row));
  }
  Json j;
  j["model"] = familyName(family);
  j["folds"] = k;
  j["bestIndex"] = result.bestIndex;
  j["bestParams"] = result.best();
  j["bestScore"] = result.table[result.bestIndex].meanAccuracy;
  j["table"] = std::move(table);
  return j.dump(indent) + "\n";
}

}  // namespace parsig
