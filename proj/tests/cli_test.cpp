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

// Runs the parsig binary end to end through the shell.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "parsig/data.hpp"
#include "test_support.hpp"

namespace parsig {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("parsig_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Exit status of "parsig <args>"; stdout goes to `out` in the scratch dir.
  int run(const std::string& args, const std::string& out = "stdout.txt") {
    const std::string cmd = std::string(PARSIG_CLI) + " " + args + " > " + (dir_ / out).string() + " 2> " +
                            (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string read(const std::string& name) { return readTextFile(dir_ / name); }
  std::string path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

const std::string kSynthetic = testing::resource("corpus/synthetic.tsv").string();

TEST_F(Cli, TrainPosIsDeterministicForEveryFamily) {
  for (const std::string model : {"hmm", "logreg", "forest"}) {
    ASSERT_EQ(run("train-pos --model " + model + " --corpus " + kSynthetic + " --seed 5 --out " + path("a.json")), 0);
    ASSERT_EQ(run("train-pos --model " + model + " --corpus " + kSynthetic + " --seed 5 --out " + path("b.json")), 0);
    EXPECT_EQ(read("a.json"), read("b.json")) << model;
  }
}

TEST_F(Cli, TrainTokenizerAndEmbedAreDeterministic) {
  const std::string tok = "train-tokenizer --corpus " + kSynthetic + " --vocab-size 60 --seed 3 --out ";
  ASSERT_EQ(run(tok + path("v1.txt")), 0);
  ASSERT_EQ(run(tok + path("v2.txt")), 0);
  EXPECT_EQ(read("v1.txt"), read("v2.txt"));
  const std::string emb = "train-embed --corpus " + kSynthetic + " --dims 8 --epochs 2 --seed 3 --out ";
  ASSERT_EQ(run(emb + path("e1.txt")), 0);
  ASSERT_EQ(run(emb + path("e2.txt")), 0);
  EXPECT_EQ(read("e1.txt"), read("e2.txt"));
  EXPECT_EQ(run("similar --vectors " + path("e1.txt") + " --word mard --k 3"), 0);
  EXPECT_EQ(nlohmann::json::parse(read("stdout.txt")).at("neighbors").size(), 3u);
}

TEST_F(Cli, AnnotateMatchesGolden) {
  ASSERT_EQ(run("annotate --tasks tok,lemma,pos,p2t --bundle " + testing::resource("demo_bundle").string() +
                " --text '" + testing::kExampleSentence + "'"),
            0);
  EXPECT_EQ(read("stdout.txt"), readTextFile(testing::golden("annotate_example.json")));
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("tokenize"), 2);
  EXPECT_EQ(run("no-such-command"), 2);
  EXPECT_EQ(run("stats --corpus " + path("missing.tsv")), 3);
  EXPECT_EQ(run("train-pos --model crf --corpus " + kSynthetic + " --out " + path("m.json")), 2);
  writeTextFile(dir_ / "bad.tsv", "#doc x\n1\tw\tw\tXYZ\t_\n");
  EXPECT_EQ(run("stats --corpus " + path("bad.tsv")), 2);
  EXPECT_EQ(run("annotate --tasks pos --bundle " + path("nobundle") + " --text ud"), 3);
  EXPECT_EQ(run("stats --corpus " + kSynthetic), 0);
}

TEST_F(Cli, ConfigFileSuppliesSeed) {
  writeTextFile(dir_ / "cfg.json", R"({"seed": 9})");
  ASSERT_EQ(run("train-pos --model forest --corpus " + kSynthetic + " --config " + path("cfg.json") + " --out " +
                path("a.json")),
            0);
  ASSERT_EQ(run("train-pos --model forest --corpus " + kSynthetic + " --seed 9 --out " + path("b.json")), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
}

}  // namespace
}  // namespace parsig
