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

#include "parsig/metrics.hpp"

#include "parsig/error.hpp"
#include "parsig/utf8.hpp"

namespace parsig {

EditSummary& EditSummary::operator+=(const EditSummary& o) {
  substitutions += o.substitutions;
  deletions += o.deletions;
  insertions += o.insertions;
  referenceLength += o.referenceLength;
  return *this;
}

namespace {

std::vector<std::string> splitWords(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (const auto& ch : utf8::chars(s)) {
    if (utf8::isSpace(utf8::decode(ch))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::optional<double> ratio(long num, long den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

struct OneVsRest {
  long tp = 0, fp = 0, fn = 0, tn = 0;
};

ClassScores scoresFrom(const OneVsRest& c) {
  ClassScores s;
  s.acc = ratio(c.tp + c.tn, c.tp + c.fp + c.fn + c.tn);
  s.precision = ratio(c.tp, c.tp + c.fp);
  s.recall = ratio(c.tp, c.tp + c.fn);
  // Harmonic mean of precision and recall in count form; it is 0 when either
  // side is 0 and undefined only when both are.
  s.f1 = ratio(2 * c.tp, 2 * c.tp + c.fp + c.fn);
  const auto specificity = ratio(c.tn, c.tn + c.fp);
  if (s.recall && specificity) s.auc = (*s.recall + *specificity) / 2.0;
  return s;
}

std::optional<double> meanDefined(const std::vector<ClassScores>& rows,
                                  std::optional<double> ClassScores::*field) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : rows) {
    if (const auto& v = r.*field) {
      sum += *v;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

}  // namespace

EditSummary wordEdits(std::string_view ref, std::string_view hyp) {
  return editDistance(splitWords(ref), splitWords(hyp));
}

EditSummary charEdits(std::string_view ref, std::string_view hyp) {
  return editDistance(utf8::chars(ref), utf8::chars(hyp));
}

double errorRate(const EditSummary& summary) {
  if (summary.referenceLength == 0) {
    if (summary.errors() == 0) return 0.0;
    throw InputError("error rate undefined for an empty reference with a non-empty hypothesis");
  }
  return 100.0 * static_cast<double>(summary.errors()) /
         static_cast<double>(summary.referenceLength);
}

ErrorRates corpusErrorRates(const std::vector<std::string>& refs,
                            const std::vector<std::string>& hyps) {
  if (refs.size() != hyps.size())
    throw InputError("reference/hypothesis count mismatch: " + std::to_string(refs.size()) +
                     " vs " + std::to_string(hyps.size()));
  ErrorRates r;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    r.words += wordEdits(refs[i], hyps[i]);
    r.chars += charEdits(refs[i], hyps[i]);
  }
  r.wer = errorRate(r.words);
  r.cer = errorRate(r.chars);
  return r;
}

double lemmaAccuracy(const std::vector<std::string>& gold,
                     const std::vector<std::string>& predicted) {
  if (gold.size() != predicted.size())
    throw InputError("gold/predicted lemma count mismatch");
  if (gold.empty()) throw InputError("no lemmas to score");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) hits += gold[i] == predicted[i] ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(gold.size());
}

ConfusionMatrix::ConfusionMatrix(TagSet classes)
    : classes_(std::move(classes)),
      counts_(Matrix<long>::Zero(static_cast<Eigen::Index>(classes_.size()),
                                 static_cast<Eigen::Index>(classes_.size()))) {}

void ConfusionMatrix::add(std::size_t actual, std::size_t predicted, long count) {
  counts_(static_cast<Eigen::Index>(actual), static_cast<Eigen::Index>(predicted)) += count;
}

void ConfusionMatrix::add(std::string_view actual, std::string_view predicted) {
  const auto a = classes_.index(actual);
  const auto p = classes_.index(predicted);
  if (!a || !p)
    throw InputError("label outside the class set: '" + std::string(a ? predicted : actual) + "'");
  add(*a, *p);
}

ClassMetrics classMetrics(const ConfusionMatrix& cm) {
  const long total = cm.total();
  if (total <= 0) throw InputError("confusion matrix is empty");
  const auto& counts = cm.counts();

  ClassMetrics out;
  out.classes = cm.classes().tags();
  OneVsRest pooled;
  for (Eigen::Index c = 0; c < counts.rows(); ++c) {
    OneVsRest k;
    k.tp = counts(c, c);
    k.fn = counts.row(c).sum() - k.tp;
    k.fp = counts.col(c).sum() - k.tp;
    k.tn = total - k.tp - k.fn - k.fp;
    pooled.tp += k.tp;
    pooled.fp += k.fp;
    pooled.fn += k.fn;
    pooled.tn += k.tn;
    out.perClass.push_back(scoresFrom(k));
  }
  out.micro = scoresFrom(pooled);
  out.macro.acc = meanDefined(out.perClass, &ClassScores::acc);
  out.macro.auc = meanDefined(out.perClass, &ClassScores::auc);
  out.macro.f1 = meanDefined(out.perClass, &ClassScores::f1);
  out.macro.precision = meanDefined(out.perClass, &ClassScores::precision);
  out.macro.recall = meanDefined(out.perClass, &ClassScores::recall);
  out.overallAccuracy = static_cast<double>(counts.trace()) / static_cast<double>(total);
  return out;
}

}  // namespace parsig
