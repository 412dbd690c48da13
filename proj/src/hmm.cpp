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

#include "parsig/hmm.hpp"

#include <json.hpp>

#include "parsig/error.hpp"
#include "json_util.hpp"

namespace parsig {

std::size_t HmmModel::emissionColumn(std::string_view word) const {
  const auto it = vocabulary.find(word);
  return it == vocabulary.end() ? unknownColumn() : it->second;
}

double HmmModel::pathScore(const std::vector<std::string>& words,
                           const std::vector<std::size_t>& path) const {
  double score = 0.0;
  std::size_t prev = kStart;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto t = static_cast<Eigen::Index>(path[i]);
    score += transition(static_cast<Eigen::Index>(prev), t) +
             emission(t, static_cast<Eigen::Index>(emissionColumn(words[i])));
    prev = path[i] + 1;
  }
  return score;
}

namespace {

// Log of count/total with smoothing folded in by the caller; an empty row
// becomes uniform.
void normalizeRows(const MatrixXd& counts, double alpha, MatrixXd& out) {
  out.resize(counts.rows(), counts.cols());
  const auto cols = static_cast<double>(counts.cols());
  for (Eigen::Index r = 0; r < counts.rows(); ++r) {
    const double denom = counts.row(r).sum() + alpha * cols;
    if (denom <= 0.0) {
      out.row(r).setConstant(-std::log(cols));
    } else {
      out.row(r) = ((counts.row(r).array() + alpha) / denom).log();
    }
  }
}

}  // namespace

HmmModel trainHmm(const Corpus& corpus, double alpha, const TagSet& reference) {
  if (!(alpha >= 0.0)) throw InputError("smoothing constant must be non-negative");
  for (const auto* s : corpus.sentences())
    for (const auto& t : s->tokens)
      if (!t.pos) throw InputError("token '" + t.text + "' has no POS annotation");

  HmmModel m;
  m.tags = reference.restrictedTo(corpus);
  m.smoothing = alpha;
  for (const auto* s : corpus.sentences())
    for (const auto& t : s->tokens) m.vocabulary.emplace(t.text, 0);
  std::size_t col = 0;
  for (auto& [word, index] : m.vocabulary) index = col++;

  const auto nTags = static_cast<Eigen::Index>(m.tags.size());
  MatrixXd transCounts = MatrixXd::Zero(nTags + 1, nTags);
  MatrixXd emitCounts = MatrixXd::Zero(nTags, static_cast<Eigen::Index>(m.vocabulary.size() + 1));
  for (const auto* s : corpus.sentences()) {
    Eigen::Index prev = HmmModel::kStart;
    for (const auto& t : s->tokens) {
      const auto tag = static_cast<Eigen::Index>(*m.tags.index(*t.pos));
      transCounts(prev, tag) += 1.0;
      emitCounts(tag, static_cast<Eigen::Index>(m.vocabulary.at(t.text))) += 1.0;
      prev = tag + 1;
    }
  }
  normalizeRows(transCounts, alpha, m.transition);
  normalizeRows(emitCounts, alpha, m.emission);
  return m;
}

std::vector<std::size_t> viterbiPath(const HmmModel& model, const std::vector<std::string>& words) {
  const auto nTags = static_cast<Eigen::Index>(model.tags.size());
  const auto n = static_cast<Eigen::Index>(words.size());
  if (n == 0) return {};

  MatrixXd delta(n, nTags);
  Matrix<Eigen::Index> back(n, nTags);
  for (Eigen::Index j = 0; j < nTags; ++j) {
    delta(0, j) = model.transition(HmmModel::kStart, j) +
                  model.emission(j, static_cast<Eigen::Index>(model.emissionColumn(words[0])));
    back(0, j) = -1;
  }
  for (Eigen::Index i = 1; i < n; ++i) {
    const auto w = static_cast<Eigen::Index>(model.emissionColumn(words[static_cast<std::size_t>(i)]));
    for (Eigen::Index j = 0; j < nTags; ++j) {
      Eigen::Index arg = 0;
      double best = delta(i - 1, 0) + model.transition(1, j);
      for (Eigen::Index p = 1; p < nTags; ++p) {
        const double s = delta(i - 1, p) + model.transition(p + 1, j);
        if (s > best) {
          best = s;
          arg = p;
        }
      }
      delta(i, j) = best + model.emission(j, w);
      back(i, j) = arg;
    }
  }

  Eigen::Index last = 0;
  for (Eigen::Index j = 1; j < nTags; ++j)
    if (delta(n - 1, j) > delta(n - 1, last)) last = j;
  std::vector<std::size_t> path(static_cast<std::size_t>(n));
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    path[static_cast<std::size_t>(i)] = static_cast<std::size_t>(last);
    if (i > 0) last = back(i, last);
  }
  return path;
}

std::vector<std::string> viterbiDecode(const HmmModel& model, const std::vector<std::string>& words) {
  std::vector<std::string> tags;
  for (const auto t : viterbiPath(model, words)) tags.push_back(model.tags[t]);
  return tags;
}

std::string serializeHmm(const HmmModel& model) {
  nlohmann::ordered_json j;
  j["format"] = "#hmm-v1";
  j["smoothing"] = model.smoothing;
  j["tags"] = model.tags.tags();
  std::vector<std::string> vocab(model.vocabulary.size());
  for (const auto& [word, index] : model.vocabulary) vocab[index] = word;
  j["vocabulary"] = vocab;
  j["transition"] = jsonio::matrixToJson(model.transition);
  j["emission"] = jsonio::matrixToJson(model.emission);
  return j.dump(1) + "\n";
}

HmmModel parseHmm(std::string_view text) {
  const auto j = jsonio::parseDocument(text, "#hmm-v1");
  try {
    HmmModel m;
    m.smoothing = j.at("smoothing").get<double>();
    m.tags = TagSet(j.at("tags").get<std::vector<std::string>>());
    const auto vocab = j.at("vocabulary").get<std::vector<std::string>>();
    for (std::size_t i = 0; i < vocab.size(); ++i)
      if (!m.vocabulary.emplace(vocab[i], i).second)
        throw ResourceError("duplicate vocabulary word '" + vocab[i] + "'");
    m.transition = jsonio::matrixFromJson(j.at("transition"));
    m.emission = jsonio::matrixFromJson(j.at("emission"));
    const auto nTags = static_cast<Eigen::Index>(m.tags.size());
    if (m.transition.rows() != nTags + 1 || m.transition.cols() != nTags ||
        m.emission.rows() != nTags || m.emission.cols() != static_cast<Eigen::Index>(vocab.size() + 1))
      throw ResourceError("hmm model matrix shapes do not match tags/vocabulary");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ResourceError(std::string("malformed hmm model: ") + e.what());
  }
}

}  // namespace parsig
