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

#include "parsig/tokenizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "parsig/error.hpp"
#include "parsig/linalg.hpp"
#include "parsig/utf8.hpp"

namespace parsig {

std::vector<AnnotatedToken> wordTokenize(std::string_view sentence) {
  std::vector<AnnotatedToken> out;
  auto emit = [&out](std::string text) {
    AnnotatedToken t;
    t.id = out.size();
    t.text = std::move(text);
    out.push_back(std::move(t));
  };

  const auto chars = utf8::chars(sentence);
  std::size_t i = 0;
  while (i < chars.size()) {
    if (utf8::isSpace(utf8::decode(chars[i]))) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < chars.size() && !utf8::isSpace(utf8::decode(chars[end]))) ++end;

    std::size_t lo = i, hi = end;
    while (lo < hi && utf8::isPunct(utf8::decode(chars[lo]))) ++lo;
    while (hi > lo && utf8::isPunct(utf8::decode(chars[hi - 1]))) --hi;

    for (std::size_t k = i; k < lo; ++k) emit(chars[k]);
    if (lo < hi) {
      std::string word;
      for (std::size_t k = lo; k < hi; ++k) word += chars[k];
      emit(std::move(word));
    }
    for (std::size_t k = hi; k < end; ++k) emit(chars[k]);
    i = end;
  }
  return out;
}

void UnigramTrainConfig::validate() const {
  if (!(pruneKeepRatio > 0.0 && pruneKeepRatio < 1.0))
    throw InputError("pruneKeepRatio must lie strictly between 0 and 1");
  if (maxPieceLength < 1) throw InputError("maxPieceLength must be at least 1");
  if (emIterationsPerRound < 1) throw InputError("emIterationsPerRound must be at least 1");
  if (!(seedVocabMultiplier >= 1.0)) throw InputError("seedVocabMultiplier must be at least 1");
}

UnigramVocab::UnigramVocab(std::map<std::string, double> pieces, double unkLogProb)
    : pieces_(std::move(pieces)), unkLogProb_(unkLogProb) {
  for (const auto& [piece, lp] : pieces_) {
    const std::size_t len = utf8::length(piece);
    if (len == 0) throw InputError("empty piece in unigram vocabulary");
    if (len == 1) required_.insert(piece);
    maxPieceLength_ = std::max(maxPieceLength_, len);
  }
}

bool UnigramVocab::contains(std::string_view piece) const {
  return pieces_.find(std::string(piece)) != pieces_.end();
}

double UnigramVocab::logProb(std::string_view piece) const {
  const auto it = pieces_.find(std::string(piece));
  return it == pieces_.end() ? unkLogProb_ : it->second;
}

namespace {

struct BestSuffix {
  double score = kNegInf<double>;
  std::size_t pieces = 0;
  std::size_t firstLength = 0;
};

// Byte offsets of each code point boundary, including the end.
std::vector<std::size_t> boundaries(std::string_view word) {
  std::vector<std::size_t> b{0};
  for (std::size_t i = 0; i < word.size();) {
    i += std::min(utf8::sequenceLength(static_cast<unsigned char>(word[i])), word.size() - i);
    b.push_back(i);
  }
  return b;
}

}  // namespace

Segmentation UnigramVocab::segment(std::string_view word) const {
  const auto b = boundaries(word);
  const std::size_t n = b.size() - 1;
  if (n == 0) return {};

  // Right-to-left DP so that, among equal (score, piece count), preferring a
  // longer first piece yields the leftmost-longest segmentation.
  std::vector<BestSuffix> best(n + 1);
  best[n] = {0.0, 0, 0};
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t maxLen = std::min(maxPieceLength_, n - i);
    for (std::size_t len = 1; len <= maxLen; ++len) {
      const std::string_view piece = word.substr(b[i], b[i + len] - b[i]);
      const auto it = pieces_.find(std::string(piece));
      double lp;
      if (it != pieces_.end()) {
        lp = it->second;
      } else if (len == 1) {
        lp = unkLogProb_;
      } else {
        continue;
      }
      const BestSuffix& rest = best[i + len];
      const BestSuffix cand{lp + rest.score, rest.pieces + 1, len};
      BestSuffix& cur = best[i];
      const bool better =
          cur.firstLength == 0 || cand.score > cur.score ||
          (cand.score == cur.score &&
           (cand.pieces < cur.pieces || (cand.pieces == cur.pieces && cand.firstLength > cur.firstLength)));
      if (better) cur = cand;
    }
  }

  Segmentation seg;
  seg.score = best[0].score;
  for (std::size_t i = 0; i < n;) {
    const std::size_t len = best[i].firstLength;
    seg.pieces.emplace_back(word.substr(b[i], b[i + len] - b[i]));
    i += len;
  }
  return seg;
}

double UnigramVocab::wordLogLikelihood(std::string_view word) const {
  const auto b = boundaries(word);
  const std::size_t n = b.size() - 1;
  std::vector<double> alpha(n + 1, kNegInf<double>);
  alpha[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i] == kNegInf<double>) continue;
    const std::size_t maxLen = std::min(maxPieceLength_, n - i);
    for (std::size_t len = 1; len <= maxLen; ++len) {
      const auto it = pieces_.find(std::string(word.substr(b[i], b[i + len] - b[i])));
      double lp;
      if (it != pieces_.end()) {
        lp = it->second;
      } else if (len == 1) {
        lp = unkLogProb_;
      } else {
        continue;
      }
      alpha[i + len] = logAddExp(alpha[i + len], alpha[i] + lp);
    }
  }
  return alpha[n];
}

std::string UnigramVocab::serialize() const {
  std::string out = "#unigram-v1\n";
  char buf[64];
  for (const auto& [piece, lp] : pieces_) {
    std::snprintf(buf, sizeof buf, "%.17g", lp);
    out += piece;
    out += '\t';
    out += buf;
    out += '\n';
  }
  return out;
}

UnigramVocab UnigramVocab::parse(std::string_view text) {
  const auto lines = splitLines(text);
  if (lines.empty() || lines.front() != "#unigram-v1")
    throw ParseError(1, "missing '#unigram-v1' header");
  std::map<std::string, double> pieces;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    const auto fields = splitTabs(lines[n]);
    if (fields.size() != 2 || fields[0].empty()) throw ParseError(n + 1, "expected piece<TAB>logprob");
    const std::string num(fields[1]);
    char* end = nullptr;
    const double lp = std::strtod(num.c_str(), &end);
    if (end == num.c_str() || *end != '\0') throw ParseError(n + 1, "bad log-probability '" + num + "'");
    if (!pieces.emplace(std::string(fields[0]), lp).second)
      throw ParseError(n + 1, "duplicate piece '" + std::string(fields[0]) + "'");
  }
  return UnigramVocab(std::move(pieces));
}

std::map<std::string, std::uint64_t> wordFrequencies(const Corpus& corpus) {
  std::map<std::string, std::uint64_t> freq;
  for (const auto* s : corpus.sentences())
    for (const auto& t : s->tokens) ++freq[t.text];
  return freq;
}

namespace {

// Working state of the trainer: pieces addressed by dense ids.
struct PieceTable {
  std::vector<std::string> pieces;
  std::vector<double> logProbs;
  std::vector<bool> required;
  std::unordered_map<std::string, std::size_t> index;

  void rebuildIndex() {
    index.clear();
    for (std::size_t i = 0; i < pieces.size(); ++i) index.emplace(pieces[i], i);
  }
};

struct Edge {
  std::size_t begin;
  std::size_t end;
  std::size_t piece;
};

struct WordLattice {
  std::size_t length = 0;
  double freq = 0.0;
  std::vector<Edge> edges;  // sorted by (begin, end)
};

std::vector<WordLattice> buildLattices(const std::map<std::string, std::uint64_t>& words,
                                       const PieceTable& table, std::size_t maxLen) {
  std::vector<WordLattice> out;
  out.reserve(words.size());
  for (const auto& [word, freq] : words) {
    const auto b = boundaries(word);
    WordLattice lat;
    lat.length = b.size() - 1;
    lat.freq = static_cast<double>(freq);
    for (std::size_t i = 0; i < lat.length; ++i) {
      for (std::size_t len = 1; len <= std::min(maxLen, lat.length - i); ++len) {
        const auto it = table.index.find(word.substr(b[i], b[i + len] - b[i]));
        if (it != table.index.end()) lat.edges.push_back({i, i + len, it->second});
      }
    }
    out.push_back(std::move(lat));
  }
  return out;
}

// Forward-backward over every lattice. Fills expected piece counts and
// returns the corpus log-likelihood. Words are visited in sorted order, so
// the summation order (and therefore the result) is fixed.
double expectation(const std::vector<WordLattice>& lattices, const PieceTable& table,
                   std::vector<double>* counts) {
  if (counts) counts->assign(table.pieces.size(), 0.0);
  double likelihood = 0.0;
  std::vector<double> alpha, beta;
  for (const auto& lat : lattices) {
    alpha.assign(lat.length + 1, kNegInf<double>);
    beta.assign(lat.length + 1, kNegInf<double>);
    alpha[0] = 0.0;
    beta[lat.length] = 0.0;
    for (const auto& e : lat.edges)  // ascending begin
      alpha[e.end] = logAddExp(alpha[e.end], alpha[e.begin] + table.logProbs[e.piece]);
    for (auto it = lat.edges.rbegin(); it != lat.edges.rend(); ++it)
      beta[it->begin] = logAddExp(beta[it->begin], table.logProbs[it->piece] + beta[it->end]);
    const double z = alpha[lat.length];
    likelihood += lat.freq * z;
    if (!counts || z == kNegInf<double>) continue;
    for (const auto& e : lat.edges) {
      const double lp = alpha[e.begin] + table.logProbs[e.piece] + beta[e.end] - z;
      if (lp != kNegInf<double>) (*counts)[e.piece] += lat.freq * std::exp(lp);
    }
  }
  return likelihood;
}

void maximization(PieceTable& table, const std::vector<double>& counts) {
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  PieceTable next;
  for (std::size_t i = 0; i < table.pieces.size(); ++i) {
    if (counts[i] <= 0.0 && !table.required[i]) continue;
    next.pieces.push_back(table.pieces[i]);
    next.required.push_back(table.required[i]);
    next.logProbs.push_back(counts[i] > 0.0 ? std::log(counts[i] / total) : kNegInf<double>);
  }
  next.rebuildIndex();
  table = std::move(next);
}

// Best score of `piece` segmented without using the piece itself.
double alternativeScore(const std::string& piece, const PieceTable& table, std::size_t maxLen) {
  const auto b = boundaries(piece);
  const std::size_t n = b.size() - 1;
  std::vector<double> best(n + 1, kNegInf<double>);
  best[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (best[i] == kNegInf<double>) continue;
    for (std::size_t len = 1; len <= std::min(maxLen, n - i); ++len) {
      if (i == 0 && len == n) continue;
      const auto it = table.index.find(piece.substr(b[i], b[i + len] - b[i]));
      if (it == table.index.end()) continue;
      best[i + len] = std::max(best[i + len], best[i] + table.logProbs[it->second]);
    }
  }
  return best[n];
}

void prune(PieceTable& table, const std::vector<double>& counts, std::size_t targetSize,
           double keepRatio, std::size_t maxLen) {
  const std::size_t size = table.pieces.size();
  const auto shrunk = static_cast<std::size_t>(std::floor(static_cast<double>(size) * keepRatio));
  const std::size_t keep = std::max(targetSize, std::min(size - 1, shrunk));

  struct Scored {
    double loss;
    std::size_t id;
  };
  std::vector<Scored> candidates;
  for (std::size_t i = 0; i < size; ++i) {
    if (table.required[i]) continue;
    const double alt = alternativeScore(table.pieces[i], table, maxLen);
    candidates.push_back({counts[i] * (table.logProbs[i] - alt), i});
  }
  // Lowest loss first; ties drop the lexicographically larger piece first.
  std::sort(candidates.begin(), candidates.end(), [&](const Scored& a, const Scored& b) {
    if (a.loss != b.loss) return a.loss < b.loss;
    return table.pieces[a.id] > table.pieces[b.id];
  });

  std::vector<bool> drop(size, false);
  std::size_t remaining = size;
  for (const auto& c : candidates) {
    if (remaining <= keep) break;
    drop[c.id] = true;
    --remaining;
  }

  PieceTable next;
  double mass = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    if (drop[i]) continue;
    next.pieces.push_back(table.pieces[i]);
    next.required.push_back(table.required[i]);
    next.logProbs.push_back(table.logProbs[i]);
    mass += std::exp(table.logProbs[i]);
  }
  const double logMass = std::log(mass);
  for (auto& lp : next.logProbs) lp -= logMass;
  next.rebuildIndex();
  table = std::move(next);
}

}  // namespace

UnigramVocab trainUnigram(const Corpus& corpus, std::size_t vocabSize,
                          const UnigramTrainConfig& config, std::uint64_t seed,
                          UnigramTrainTrace* trace) {
  return trainUnigram(wordFrequencies(corpus), vocabSize, config, seed, trace);
}

UnigramVocab trainUnigram(const std::map<std::string, std::uint64_t>& words,
                          std::size_t vocabSize, const UnigramTrainConfig& config,
                          std::uint64_t /*seed: training has no random component*/,
                          UnigramTrainTrace* trace) {
  config.validate();
  if (words.empty()) throw InputError("cannot train a unigram model on an empty corpus");

  const auto maxLen = static_cast<std::size_t>(config.maxPieceLength);
  std::map<std::string, double> charFreq;
  std::map<std::string, double> substringFreq;
  for (const auto& [word, freq] : words) {
    const auto b = boundaries(word);
    const std::size_t n = b.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
      charFreq[word.substr(b[i], b[i + 1] - b[i])] += static_cast<double>(freq);
      for (std::size_t len = 2; len <= std::min(maxLen, n - i); ++len)
        substringFreq[word.substr(b[i], b[i + len] - b[i])] += static_cast<double>(freq);
    }
  }
  if (vocabSize < charFreq.size())
    throw InputError("vocabulary size " + std::to_string(vocabSize) +
                     " is below the character inventory of " + std::to_string(charFreq.size()));

  // Seed pool: every character plus the strongest substrings by
  // frequency x length.
  struct Candidate {
    std::string piece;
    double freq;
    double score;
  };
  std::vector<Candidate> pool;
  for (const auto& [piece, freq] : substringFreq)
    pool.push_back({piece, freq, freq * static_cast<double>(utf8::length(piece))});
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Candidate& a, const Candidate& b) { return a.score > b.score; });
  const auto seedCap = static_cast<std::size_t>(config.seedVocabMultiplier * static_cast<double>(vocabSize));
  const std::size_t multiSlots = seedCap > charFreq.size() ? seedCap - charFreq.size() : 0;
  if (pool.size() > multiSlots) pool.resize(multiSlots);

  PieceTable table;
  double totalFreq = 0.0;
  for (const auto& [piece, freq] : charFreq) {
    table.pieces.push_back(piece);
    table.required.push_back(true);
    table.logProbs.push_back(freq);
    totalFreq += freq;
  }
  for (const auto& c : pool) {
    table.pieces.push_back(c.piece);
    table.required.push_back(false);
    table.logProbs.push_back(c.freq);
    totalFreq += c.freq;
  }
  for (auto& lp : table.logProbs) lp = std::log(lp / totalFreq);
  table.rebuildIndex();

  std::vector<double> counts;
  while (true) {
    auto lattices = buildLattices(words, table, maxLen);
    std::vector<double> round{expectation(lattices, table, nullptr)};
    for (int it = 0; it < config.emIterationsPerRound; ++it) {
      expectation(lattices, table, &counts);
      maximization(table, counts);
      lattices = buildLattices(words, table, maxLen);
      round.push_back(expectation(lattices, table, nullptr));
    }
    if (trace) {
      trace->roundLikelihoods.push_back(std::move(round));
      trace->roundVocabSizes.push_back(table.pieces.size());
    }
    if (table.pieces.size() <= vocabSize) break;
    expectation(lattices, table, &counts);
    prune(table, counts, vocabSize, config.pruneKeepRatio, maxLen);
  }

  std::map<std::string, double> pieces;
  for (std::size_t i = 0; i < table.pieces.size(); ++i) pieces.emplace(table.pieces[i], table.logProbs[i]);
  return UnigramVocab(std::move(pieces), config.unkLogProb);
}

}  // namespace parsig
