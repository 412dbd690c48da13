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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parsig/data.hpp"
#include "parsig/embed.hpp"
#include "parsig/lemmatizer.hpp"
#include "parsig/tagger.hpp"
#include "parsig/tokenizer.hpp"
#include "parsig/translit.hpp"

namespace parsig {

enum class TaskId { Tokenizer, Lemma, Pos, P2T };

/// Output key: "tokenizer", "lemma", "pos" or "p2t".
std::string_view taskKey(TaskId task);
/// Accepts the output keys plus "tok", case-insensitively.
TaskId parseTask(std::string_view name);
/// Comma-separated list, e.g. "tok,lemma,pos,p2t".
std::vector<TaskId> parseTaskList(std::string_view list);

/// Resources loaded once and shared read-only between pipeline runs.
struct PipelineBundle {
  std::optional<LemmaLexicon> lemmaLexicon;
  std::optional<LemmaRules> lemmaRules;
  std::optional<PosTagger> posTagger;
  std::optional<TranslitLexicon> p2tLexicon;
  std::optional<TranslitRules> p2tRules;
  std::optional<GlyphTable> glyphTable;
  std::optional<UnigramVocab> unigramVocab;
  std::optional<EmbeddingMatrix> vectors;

  /// Reads manifest.json in `dir`. Recognized keys name files relative to
  /// `dir`: lemma_lexicon, lemma_rules, pos_model, p2t_lexicon, p2t_rules,
  /// glyph_table, unigram_vocab, vectors; pos_kind (hmm|logreg|forest) must
  /// agree with the model file. Every key is optional.
  static PipelineBundle load(const std::filesystem::path& dir);
};

struct AnnotationResult {
  /// Requested tasks in canonical order, without duplicates.
  std::vector<TaskId> tasks;
  std::vector<AnnotatedToken> tokens;

  /// {"tokenizer": [{"id", "text"}], "lemma": [{"lemma", "text"}],
  ///  "pos": [{"POS", "text"}], "p2t": [{"translite", "text"}]}, with only
  /// the requested keys present.
  std::string toJson(int indent = 2) const;
};

/// Tokenizes `sentence` and runs the requested layers. Throws InputError
/// for an empty task list and ResourceError naming the task and the
/// missing resource.
AnnotationResult runPipeline(std::string_view sentence, const std::vector<TaskId>& tasks,
                             const PipelineBundle& bundle);

}  // namespace parsig
