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

#include "parsig/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>

#include "parsig/error.hpp"

namespace parsig {

std::string_view taskKey(TaskId task) {
  switch (task) {
    case TaskId::Tokenizer: return "tokenizer";
    case TaskId::Lemma: return "lemma";
    case TaskId::Pos: return "pos";
    case TaskId::P2T: return "p2t";
  }
  return "";
}

TaskId parseTask(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "tok" || lower == "tokenizer") return TaskId::Tokenizer;
  if (lower == "lemma") return TaskId::Lemma;
  if (lower == "pos") return TaskId::Pos;
  if (lower == "p2t") return TaskId::P2T;
  throw InputError("unknown task '" + std::string(name) + "' (expected tok, lemma, pos or p2t)");
}

std::vector<TaskId> parseTaskList(std::string_view list) {
  std::vector<TaskId> tasks;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto end = std::min(list.find(',', pos), list.size());
    const auto item = list.substr(pos, end - pos);
    if (!item.empty()) tasks.push_back(parseTask(item));
    pos = end + 1;
  }
  return tasks;
}

PipelineBundle PipelineBundle::load(const std::filesystem::path& dir) {
  const auto manifestPath = dir / "manifest.json";
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(readTextFile(manifestPath));
  } catch (const nlohmann::json::exception& e) {
    throw ResourceError(manifestPath.string() + ": " + e.what());
  }
  if (!manifest.is_object()) throw ResourceError(manifestPath.string() + ": manifest must be a JSON object");

  auto file = [&](const char* key) -> std::optional<std::string> {
    if (!manifest.contains(key)) return std::nullopt;
    if (!manifest[key].is_string()) throw ResourceError(std::string("manifest key '") + key + "' must be a string");
    return readTextFile(dir / manifest[key].get<std::string>());
  };
  // Resource files are data shipped with the bundle, so their parse errors
  // are resource errors.
  auto guarded = [&](const char* key, auto&& parse) {
    try {
      return parse();
    } catch (const ResourceError&) {
      throw;
    } catch (const std::exception& e) {
      throw ResourceError(std::string(key) + ": " + e.what());
    }
  };

  PipelineBundle b;
  if (auto t = file("lemma_lexicon")) b.lemmaLexicon = guarded("lemma_lexicon", [&] { return LemmaLexicon::parse(*t); });
  if (auto t = file("lemma_rules")) b.lemmaRules = guarded("lemma_rules", [&] { return LemmaRules::parse(*t); });
  if (auto t = file("pos_model")) {
    b.posTagger = guarded("pos_model", [&] { return PosTagger::parse(*t); });
    if (manifest.contains("pos_kind")) {
      const auto kind = manifest["pos_kind"].get<std::string>();
      if (kind != familyName(b.posTagger->family()))
        throw ResourceError("manifest pos_kind '" + kind + "' does not match the " +
                            std::string(familyName(b.posTagger->family())) + " model file");
    }
  }
  if (auto t = file("p2t_lexicon")) b.p2tLexicon = guarded("p2t_lexicon", [&] { return TranslitLexicon::parse(*t); });
  if (auto t = file("p2t_rules")) b.p2tRules = guarded("p2t_rules", [&] { return TranslitRules::parse(*t); });
  if (auto t = file("glyph_table")) b.glyphTable = guarded("glyph_table", [&] { return GlyphTable::parse(*t); });
  if (auto t = file("unigram_vocab")) b.unigramVocab = guarded("unigram_vocab", [&] { return UnigramVocab::parse(*t); });
  if (auto t = file("vectors")) b.vectors = guarded("vectors", [&] { return parseVectors(*t); });
  return b;
}

namespace {

void require(bool present, TaskId task, const char* resource) {
  if (!present)
    throw ResourceError("task " + std::string(taskKey(task)) + " needs resource '" + resource +
                        "', which the bundle does not provide");
}

}  // namespace

AnnotationResult runPipeline(std::string_view sentence, const std::vector<TaskId>& tasks,
                             const PipelineBundle& bundle) {
  if (tasks.empty()) throw InputError("no tasks requested");
  AnnotationResult result;
  for (const TaskId t : {TaskId::Tokenizer, TaskId::Lemma, TaskId::Pos, TaskId::P2T})
    if (std::find(tasks.begin(), tasks.end(), t) != tasks.end()) result.tasks.push_back(t);
  auto wants = [&](TaskId t) { return std::find(result.tasks.begin(), result.tasks.end(), t) != result.tasks.end(); };

  // Check every resource before doing any work.
  if (wants(TaskId::Lemma)) {
    require(bundle.lemmaLexicon.has_value(), TaskId::Lemma, "lemma_lexicon");
    require(bundle.lemmaRules.has_value(), TaskId::Lemma, "lemma_rules");
  }
  if (wants(TaskId::Pos)) require(bundle.posTagger.has_value(), TaskId::Pos, "pos_model");
  if (wants(TaskId::P2T)) {
    require(bundle.p2tLexicon.has_value(), TaskId::P2T, "p2t_lexicon");
    require(bundle.p2tRules.has_value(), TaskId::P2T, "p2t_rules");
  }

  result.tokens = wordTokenize(sentence);
  if (wants(TaskId::Lemma)) result.tokens = lemmatizeSentence(*bundle.lemmaLexicon, *bundle.lemmaRules, std::move(result.tokens));
  if (wants(TaskId::Pos)) {
    std::vector<std::string> words;
    for (const auto& t : result.tokens) words.push_back(t.text);
    const auto tags = bundle.posTagger->tag(words);
    for (std::size_t i = 0; i < tags.size(); ++i) result.tokens[i].pos = tags[i];
  }
  if (wants(TaskId::P2T)) result.tokens = translitSentence(*bundle.p2tLexicon, *bundle.p2tRules, std::move(result.tokens));
  return result;
}

std::string AnnotationResult::toJson(int indent) const {
  using Json = nlohmann::ordered_json;
  Json out = Json::object();
  for (const TaskId task : tasks) {
    auto list = Json::array();
    for (const auto& t : tokens) {
      Json rec;
      switch (task) {
        case TaskId::Tokenizer: rec["id"] = t.id; break;
        case TaskId::Lemma: rec["lemma"] = t.lemma.value_or(t.text); break;
        case TaskId::Pos: rec["POS"] = t.pos.value_or(""); break;
        case TaskId::P2T: rec["translite"] = t.translit.value_or(""); break;
      }
      rec["text"] = t.text;
      list.push_back(std::move(rec));
    }
    out[std::string(taskKey(task))] = std::move(list);
  }
  return out.dump(indent) + "\n";
}

}  // namespace parsig
