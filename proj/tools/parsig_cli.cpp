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

// Command-line front end. Every subcommand writes one JSON document to
// stdout. Exit codes: 0 success, 2 input error, 3 resource error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <set>
#include <string>

#include "parsig/data.hpp"
#include "parsig/embed.hpp"
#include "parsig/error.hpp"
#include "parsig/lemmatizer.hpp"
#include "parsig/pipeline.hpp"
#include "parsig/report.hpp"
#include "parsig/tagger.hpp"
#include "parsig/tokenizer.hpp"
#include "parsig/translit.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace parsig;

constexpr int kInputErrorExit = 2;
constexpr int kResourceErrorExit = 3;

/// Keys of a --config file. Values given explicitly on the command line
/// win over the file.
class Config {
 public:
  void load(const std::string& path) {
    if (path.empty()) return;
    try {
      json_ = Json::parse(readTextFile(path));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(path + ": " + e.what());
    }
    if (!json_.is_object()) throw InputError(path + ": config must be a JSON object");
  }

  void allow(std::initializer_list<const char*> keys) {
    std::set<std::string> allowed(keys.begin(), keys.end());
    allowed.insert("seed");
    for (const auto& [k, v] : json_.items())
      if (!allowed.contains(k)) throw InputError("unknown config key '" + k + "'");
  }

  template <class T>
  void apply(const char* key, T& target, const CLI::Option* flag) const {
    if (flag && flag->count() > 0) return;
    if (!json_.contains(key)) return;
    try {
      target = json_.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("config key '") + key + "': " + e.what());
    }
  }

  const Json& raw() const { return json_; }

 private:
  Json json_ = Json::object();
};

Corpus loadCorpus(const std::string& path) { return parseCorpus(readTextFile(path)); }

std::vector<std::string> inputLines(const std::string& text, const std::string& file) {
  if (!text.empty() && !file.empty()) throw InputError("give either --text or --input, not both");
  if (!text.empty()) return {text};
  if (file.empty()) throw InputError("one of --text or --input is required");
  std::vector<std::string> lines;
  for (const auto line : splitLines(readTextFile(file)))
    if (!line.empty()) lines.emplace_back(line);
  return lines;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json tokensJson(const std::vector<AnnotatedToken>& tokens) {
  Json list = Json::array();
  for (const auto& t : tokens) list.push_back(Json{{"id", t.id}, {"text", t.text}});
  return list;
}

ParamPoint paramsFromConfig(const Config& config) {
  ParamPoint p;
  for (const auto& [k, v] : config.raw().items()) {
    if (k == "seed") continue;
    if (v.is_boolean()) p[k] = v.get<bool>() ? 1.0 : 0.0;
    else if (v.is_number()) p[k] = v.get<double>();
    else throw InputError("config key '" + k + "' must be a number");
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parsig: tokenize, lemmatize, tag and transliterate Middle Persian transcriptions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "parsig 0.1.0");

  std::uint64_t seed = 0;
  std::string configPath;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed")->capture_default_str();
    sub->add_option("--config", configPath, "JSON file with default option values")->check(CLI::ExistingFile);
  };
  Config config;

  // tokenize
  auto* tokenize = app.add_subcommand("tokenize", "Split sentences into word tokens");
  std::string text, input, vocabPath;
  tokenize->add_option("--text", text, "Sentence to tokenize");
  tokenize->add_option("--input", input, "File with one sentence per line");
  tokenize->add_option("--vocab", vocabPath, "Unigram vocabulary; adds subword pieces per token");
  common(tokenize);

  // annotate
  auto* annotate = app.add_subcommand("annotate", "Run pipeline tasks over sentences");
  std::string tasksArg = "tok,lemma,pos,p2t", bundleDir;
  annotate->add_option("--tasks", tasksArg, "Comma-separated tasks: tok,lemma,pos,p2t")->capture_default_str();
  annotate->add_option("--bundle", bundleDir, "Resource bundle directory")->required();
  annotate->add_option("--text", text, "Sentence to annotate");
  annotate->add_option("--input", input, "File with one sentence per line");
  common(annotate);

  // train-pos
  auto* trainPos = app.add_subcommand("train-pos", "Train a POS tagger");
  std::string modelKind = "hmm", corpusPath, outPath;
  double testFraction = 0.0;
  ParamPoint cliParams;
  std::vector<std::string> paramArgs;
  trainPos->add_option("--model", modelKind, "hmm, logreg or forest")
      ->check(CLI::IsMember({"hmm", "logreg", "forest"}))
      ->capture_default_str();
  trainPos->add_option("--corpus", corpusPath, "Annotated corpus (TSV)")->required();
  trainPos->add_option("--out", outPath, "Model file to write")->required();
  trainPos->add_option("--param", paramArgs, "Hyperparameter as key=value (repeatable)");
  trainPos->add_option("--test-fraction", testFraction, "Hold out this fraction and report its accuracy");
  common(trainPos);

  // train-tokenizer
  auto* trainTok = app.add_subcommand("train-tokenizer", "Train a unigram subword vocabulary");
  std::size_t vocabSize = 8000;
  auto* vocabSizeOpt = trainTok->add_option("--vocab-size", vocabSize, "Target vocabulary size")->capture_default_str();
  trainTok->add_option("--corpus", corpusPath, "Corpus (TSV)")->required();
  trainTok->add_option("--out", outPath, "Vocabulary file to write")->required();
  common(trainTok);

  // train-embed
  auto* trainEmbed = app.add_subcommand("train-embed", "Train skip-gram word vectors");
  SkipGramConfig sg;
  auto* dimsOpt = trainEmbed->add_option("--dims", sg.dims)->capture_default_str();
  auto* epochsOpt = trainEmbed->add_option("--epochs", sg.epochs)->capture_default_str();
  auto* windowOpt = trainEmbed->add_option("--window", sg.window)->capture_default_str();
  auto* negOpt = trainEmbed->add_option("--negatives", sg.negatives)->capture_default_str();
  auto* lrOpt = trainEmbed->add_option("--lr", sg.initialLr)->capture_default_str();
  auto* minCountOpt = trainEmbed->add_option("--min-count", sg.minCount)->capture_default_str();
  trainEmbed->add_option("--corpus", corpusPath, "Corpus (TSV)")->required();
  trainEmbed->add_option("--out", outPath, "Vector file to write")->required();
  common(trainEmbed);

  // eval-pos
  auto* evalPos = app.add_subcommand("eval-pos", "Evaluate a POS model against gold tags");
  std::string modelPath;
  evalPos->add_option("--model", modelPath, "Model file")->required();
  evalPos->add_option("--corpus", corpusPath, "Gold corpus (TSV)")->required();
  evalPos->add_option("--test-fraction", testFraction, "Evaluate only on this held-out fraction");
  common(evalPos);

  // eval-p2t
  auto* evalP2t = app.add_subcommand("eval-p2t", "WER/CER of the transliteration rules");
  bool ratios = false;
  evalP2t->add_option("--corpus", corpusPath, "Corpus with gold transliterations")->required();
  evalP2t->add_option("--bundle", bundleDir, "Resource bundle directory")->required();
  evalP2t->add_flag("--ratio", ratios, "Report ratios instead of percentages");
  common(evalP2t);

  // eval-lemma
  auto* evalLemma = app.add_subcommand("eval-lemma", "Accuracy of the lemmatizer");
  evalLemma->add_option("--corpus", corpusPath, "Corpus with gold lemmas")->required();
  evalLemma->add_option("--bundle", bundleDir, "Resource bundle directory")->required();
  common(evalLemma);

  // grid-search
  auto* grid = app.add_subcommand("grid-search", "Cross-validated hyperparameter search");
  int folds = 10;
  std::string gridPath;
  grid->add_option("--model", modelKind, "hmm, logreg or forest")
      ->check(CLI::IsMember({"hmm", "logreg", "forest"}))
      ->capture_default_str();
  grid->add_option("--corpus", corpusPath, "Annotated corpus (TSV)")->required();
  auto* foldsOpt = grid->add_option("--folds", folds, "Number of folds")->capture_default_str();
  grid->add_option("--grid", gridPath, "JSON object mapping parameter names to value lists")
      ->check(CLI::ExistingFile);
  common(grid);

  // convert
  auto* convert = app.add_subcommand("convert", "Transliteration to glyph code points");
  std::string glyphPath;
  convert->add_option("--text", text, "Transliterated line");
  convert->add_option("--input", input, "File with one transliterated line per line");
  convert->add_option("--glyphs", glyphPath, "Glyph table (TSV)");
  convert->add_option("--bundle", bundleDir, "Bundle whose glyph table to use");
  bool convertJson = false;
  convert->add_flag("--json", convertJson, "Emit JSON instead of one hex line per input line");
  common(convert);

  // similar
  auto* similar = app.add_subcommand("similar", "Nearest neighbours in an embedding");
  std::string vectorsPath, word;
  int k = 10;
  similar->add_option("--vectors", vectorsPath, "Vector file")->required();
  similar->add_option("--word", word, "Query word")->required();
  similar->add_option("--k", k, "Number of neighbours")->capture_default_str();
  common(similar);

  // stats
  auto* stats = app.add_subcommand("stats", "Corpus summary statistics");
  stats->add_option("--corpus", corpusPath, "Corpus (TSV)")->required();
  common(stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputErrorExit;
  }

  try {
    config.load(configPath);
    for (auto* sub : app.get_subcommands()) config.apply("seed", seed, sub->get_option("--seed"));

    if (tokenize->parsed()) {
      config.allow({"vocab"});
      config.apply("vocab", vocabPath, tokenize->get_option("--vocab"));
      std::optional<UnigramVocab> vocab;
      if (!vocabPath.empty()) vocab = UnigramVocab::parse(readTextFile(vocabPath));
      Json out = Json::array();
      for (const auto& line : inputLines(text, input)) {
        const auto tokens = wordTokenize(line);
        Json list = tokensJson(tokens);
        if (vocab)
          for (std::size_t i = 0; i < tokens.size(); ++i) list[i]["pieces"] = vocab->segment(tokens[i].text).pieces;
        out.push_back(Json{{"tokenizer", std::move(list)}});
      }
      print(text.empty() ? out : out[0]);
    } else if (annotate->parsed()) {
      config.allow({"tasks", "bundle"});
      config.apply("tasks", tasksArg, annotate->get_option("--tasks"));
      const auto tasks = parseTaskList(tasksArg);
      const auto bundle = PipelineBundle::load(bundleDir);
      const auto lines = inputLines(text, input);
      if (!text.empty()) {
        std::cout << runPipeline(lines[0], tasks, bundle).toJson(2);
      } else {
        Json out = Json::array();
        for (const auto& line : lines) out.push_back(Json::parse(runPipeline(line, tasks, bundle).toJson(-1)));
        print(out);
      }
    } else if (trainPos->parsed()) {
      ParamPoint params = paramsFromConfig(config);
      for (const auto& arg : paramArgs) {
        const auto eq = arg.find('=');
        if (eq == std::string::npos) throw InputError("--param expects key=value, got '" + arg + "'");
        try {
          params[arg.substr(0, eq)] = std::stod(arg.substr(eq + 1));
        } catch (const std::exception&) {
          throw InputError("--param value for '" + arg.substr(0, eq) + "' is not a number");
        }
      }
      const auto family = parseFamily(modelKind);
      Corpus corpus = loadCorpus(corpusPath);
      Corpus heldOut;
      if (testFraction > 0.0) std::tie(corpus, heldOut) = splitTrainTest(corpus, testFraction, seed);
      const auto tagger = trainTagger(corpus, family, params, seed);
      writeTextFile(outPath, tagger.serialize());
      Json out{{"model", familyName(family)},
               {"out", outPath},
               {"seed", seed},
               {"params", params},
               {"trainSentences", corpus.sentenceCount()},
               {"trainTokens", corpus.tokenCount()},
               {"trainAccuracy", tokenAccuracy(tagger, corpus)}};
      if (testFraction > 0.0) {
        out["testSentences"] = heldOut.sentenceCount();
        out["testAccuracy"] = tokenAccuracy(tagger, heldOut);
      }
      print(out);
    } else if (trainTok->parsed()) {
      UnigramTrainConfig tc;
      config.allow({"vocabSize", "seedVocabMultiplier", "pruneKeepRatio", "emIterationsPerRound", "maxPieceLength",
                    "unkLogProb"});
      config.apply("vocabSize", vocabSize, vocabSizeOpt);
      config.apply("seedVocabMultiplier", tc.seedVocabMultiplier, nullptr);
      config.apply("pruneKeepRatio", tc.pruneKeepRatio, nullptr);
      config.apply("emIterationsPerRound", tc.emIterationsPerRound, nullptr);
      config.apply("maxPieceLength", tc.maxPieceLength, nullptr);
      config.apply("unkLogProb", tc.unkLogProb, nullptr);
      UnigramTrainTrace trace;
      const auto vocab = trainUnigram(loadCorpus(corpusPath), vocabSize, tc, seed, &trace);
      writeTextFile(outPath, vocab.serialize());
      Json likelihoods = Json::array();
      for (const auto& round : trace.roundLikelihoods) likelihoods.push_back(round);
      print(Json{{"out", outPath},
                 {"requestedSize", vocabSize},
                 {"vocabSize", vocab.size()},
                 {"rounds", trace.roundVocabSizes.size()},
                 {"roundVocabSizes", trace.roundVocabSizes},
                 {"roundLikelihoods", std::move(likelihoods)}});
    } else if (trainEmbed->parsed()) {
      config.allow({"dims", "epochs", "window", "negatives", "lr", "minCount"});
      config.apply("dims", sg.dims, dimsOpt);
      config.apply("epochs", sg.epochs, epochsOpt);
      config.apply("window", sg.window, windowOpt);
      config.apply("negatives", sg.negatives, negOpt);
      config.apply("lr", sg.initialLr, lrOpt);
      config.apply("minCount", sg.minCount, minCountOpt);
      const auto m = trainSkipGram(loadCorpus(corpusPath), sg, seed);
      writeTextFile(outPath, serializeVectors(m));
      print(Json{{"out", outPath},
                 {"vocabulary", m.words.size()},
                 {"dims", sg.dims},
                 {"window", sg.window},
                 {"negatives", sg.negatives},
                 {"epochs", sg.epochs},
                 {"initialLr", sg.initialLr},
                 {"minCount", sg.minCount},
                 {"seed", seed},
                 {"epochLoss", m.epochLoss}});
    } else if (evalPos->parsed()) {
      const auto tagger = PosTagger::parse(readTextFile(modelPath));
      Corpus corpus = loadCorpus(corpusPath);
      if (testFraction > 0.0) corpus = splitTrainTest(corpus, testFraction, seed).second;
      std::cout << evaluatePos(tagger, corpus).toJson(2);
    } else if (evalP2t->parsed()) {
      const auto bundle = PipelineBundle::load(bundleDir);
      if (!bundle.p2tLexicon || !bundle.p2tRules) throw ResourceError("bundle lacks p2t_lexicon or p2t_rules");
      std::vector<std::string> gold, predicted;
      const Corpus corpus = loadCorpus(corpusPath);
      for (const Sentence* s : corpus.sentences())
        for (const auto& t : s->tokens)
          if (t.translit) {
            gold.push_back(*t.translit);
            predicted.push_back(phonemeToTranslit(*bundle.p2tLexicon, *bundle.p2tRules, t.text));
          }
      if (gold.empty()) throw InputError("corpus has no gold transliterations");
      std::cout << evaluateP2T(gold, predicted, !ratios).toJson(2);
    } else if (evalLemma->parsed()) {
      const auto bundle = PipelineBundle::load(bundleDir);
      if (!bundle.lemmaLexicon || !bundle.lemmaRules) throw ResourceError("bundle lacks lemma_lexicon or lemma_rules");
      std::vector<std::string> gold, predicted;
      const Corpus corpus = loadCorpus(corpusPath);
      for (const Sentence* s : corpus.sentences())
        for (const auto& t : s->tokens)
          if (t.lemma) {
            gold.push_back(*t.lemma);
            predicted.push_back(lemmatize(*bundle.lemmaLexicon, *bundle.lemmaRules, t.text));
          }
      if (gold.empty()) throw InputError("corpus has no gold lemmas");
      std::cout << evaluateLemma(gold, predicted).toJson(2);
    } else if (grid->parsed()) {
      config.allow({"grid", "folds"});
      config.apply("folds", folds, foldsOpt);
      std::map<std::string, std::vector<double>> axes;
      Json gridJson = config.raw().contains("grid") ? config.raw()["grid"] : Json(nullptr);
      if (!gridPath.empty()) {
        try {
          gridJson = Json::parse(readTextFile(gridPath));
        } catch (const nlohmann::json::exception& e) {
          throw InputError(gridPath + ": " + e.what());
        }
      }
      const auto family = parseFamily(modelKind);
      if (gridJson.is_null()) {
        switch (family) {
          case ModelFamily::Hmm: axes["alpha"] = {0.001, 0.01, 0.1, 1.0}; break;
          case ModelFamily::LogReg: axes["l2"] = {0.01, 0.1, 1.0, 10.0}; break;
          case ModelFamily::Forest: axes["nTrees"] = {10, 50, 100}; break;
        }
      } else {
        try {
          axes = gridJson.get<std::map<std::string, std::vector<double>>>();
        } catch (const nlohmann::json::exception& e) {
          throw InputError(std::string("grid must map names to number lists: ") + e.what());
        }
      }
      const auto result = gridSearch(loadCorpus(corpusPath), family, expandGrid(axes), folds, seed);
      std::cout << gridSearchJson(result, family, folds, 2);
    } else if (convert->parsed()) {
      config.allow({"glyphs"});
      config.apply("glyphs", glyphPath, convert->get_option("--glyphs"));
      std::optional<GlyphTable> table;
      if (!glyphPath.empty()) {
        table = GlyphTable::parse(readTextFile(glyphPath));
      } else if (!bundleDir.empty()) {
        table = PipelineBundle::load(bundleDir).glyphTable;
        if (!table) throw ResourceError("bundle has no glyph_table");
      } else {
        throw InputError("one of --glyphs or --bundle is required");
      }
      Json out = Json::array();
      for (const auto& line : inputLines(text, input)) {
        const auto codes = formatCodepoints(translitLineToGlyphs(*table, line));
        if (convertJson) out.push_back(Json{{"text", line}, {"glyphs", codes}});
        else std::cout << codes << "\n";
      }
      if (convertJson) print(text.empty() ? out : out[0]);
    } else if (similar->parsed()) {
      const auto m = parseVectors(readTextFile(vectorsPath));
      Json list = Json::array();
      for (const auto& [w, c] : nearestNeighbors(m, word, k)) list.push_back(Json{{"word", w}, {"cosine", c}});
      print(Json{{"word", word}, {"k", k}, {"neighbors", std::move(list)}});
    } else if (stats->parsed()) {
      std::cout << statsJson(corpusStats(loadCorpus(corpusPath)), 2);
    }
  } catch (const ResourceError& e) {
    std::cerr << "parsig: resource error: " << e.what() << "\n";
    return kResourceErrorExit;
  } catch (const InputError& e) {
    std::cerr << "parsig: input error: " << e.what() << "\n";
    return kInputErrorExit;
  } catch (const std::bad_alloc&) {
    std::cerr << "parsig: out of memory\n";
    return kResourceErrorExit;
  }
  return 0;
}
