/*
 * Copyright 2026 The sgmine Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Runs the sgmine binary. Golden files live in tests/golden/<case>/; set
// SGMINE_UPDATE_GOLDEN=1 to rewrite them after a verified change.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "subgroup/csv.hpp"

namespace {

namespace fs = std::filesystem;

const std::string kCli = SGMINE_CLI;
const fs::path kSource = SGMINE_SOURCE_DIR;
const std::string kDemo = (kSource / "data" / "demo.csv").string();

struct Outcome {
  int code;
  std::string err;
  std::string out;
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sgmine_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Outcome Exec(const std::string& args, const fs::path& dir) {
  const std::string cmd = "\"" + kCli + "\" " + args + " >\"" + (dir / "stdout.txt").string() +
                          "\" 2>\"" + (dir / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, Slurp(dir / "stderr.txt"),
          Slurp(dir / "stdout.txt")};
}

std::string DemoArgs() {
  return "--data \"" + kDemo + "\" --label-col label --score-col score";
}

void ExpectGolden(const fs::path& produced_dir, const std::string& golden_case,
                  const std::vector<std::string>& files) {
  const fs::path golden = kSource / "tests" / "golden" / golden_case;
  const bool update = std::getenv("SGMINE_UPDATE_GOLDEN") != nullptr;
  for (const std::string& f : files) {
    ASSERT_TRUE(fs::exists(produced_dir / f)) << f;
    if (update) {
      fs::create_directories(golden);
      fs::copy_file(produced_dir / f, golden / f, fs::copy_options::overwrite_existing);
    }
    EXPECT_EQ(Slurp(produced_dir / f), Slurp(golden / f)) << golden_case << "/" << f;
  }
}

std::size_t DataRows(const fs::path& csv_path) {
  std::ifstream in(csv_path);
  return subgroup::csv::Read(in).size() - 1;
}

TEST(Cli, MineWithSignificanceMatchesGolden) {
  const fs::path dir = Scratch("mine");
  const Outcome r = Exec("--out-dir \"" + (dir / "out").string() + "\" mine " + DemoArgs() +
                         " --measure roc_auc --alpha 1 --beta 1 --gen-aware --top-k 5"
                         " --kprime 100 --min-size 20 --depth 4 --significance --split"
                         " --seed 1 --resamples 300",
                     dir);
  ASSERT_EQ(r.code, 0) << r.err;
  ExpectGolden(dir / "out", "mine",
               {"results.csv", "filtered.csv", "significance.csv", "results.json",
                "significance.json"});
  const auto j = nlohmann::json::parse(Slurp(dir / "out" / "significance.json"));
  const std::size_t filtered = j["filtered"], significant = j["significant"],
                    candidates = j["candidates"];
  EXPECT_LE(filtered, 5u);
  EXPECT_LE(filtered, significant);
  EXPECT_LE(significant, candidates);
  EXPECT_EQ(candidates, DataRows(dir / "out" / "results.csv"));
  EXPECT_EQ(filtered, DataRows(dir / "out" / "filtered.csv"));
  EXPECT_NE(r.out.find("filtered " + std::to_string(filtered) + " / significant"),
            std::string::npos);
}

TEST(Cli, NoPruningWritesSameResults) {
  const fs::path dir = Scratch("prune");
  const std::string base = " mine " + DemoArgs() + " --measure arl --alpha 0 --beta 0";
  ASSERT_EQ(Exec("--out-dir \"" + (dir / "a").string() + "\"" + base, dir).code, 0);
  ASSERT_EQ(Exec("--out-dir \"" + (dir / "b").string() + "\"" + base + " --no-pruning", dir).code,
            0);
  EXPECT_EQ(Slurp(dir / "a" / "results.csv"), Slurp(dir / "b" / "results.csv"));
}

TEST(Cli, ThreadsDoNotChangeResults) {
  const fs::path dir = Scratch("threads");
  const std::string base = " mine " + DemoArgs() + " --measure pr_auc --alpha 0.3 --beta 0.3";
  ASSERT_EQ(Exec("--threads 1 --out-dir \"" + (dir / "a").string() + "\"" + base, dir).code, 0);
  ASSERT_EQ(Exec("--threads 8 --out-dir \"" + (dir / "b").string() + "\"" + base, dir).code, 0);
  EXPECT_EQ(Slurp(dir / "a" / "results.csv"), Slurp(dir / "b" / "results.csv"));
}

TEST(Cli, MissingLabelColumnIsUsageError) {
  const fs::path dir = Scratch("usage");
  const Outcome r = Exec("mine --data \"" + kDemo + "\" --score-col score", dir);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--label-col"), std::string::npos) << r.err;
}

TEST(Cli, UnknownFlagIsUsageError) {
  const fs::path dir = Scratch("flag");
  EXPECT_EQ(Exec("mine --bogus", dir).code, 2);
  EXPECT_EQ(Exec("", dir).code, 2);
}

TEST(Cli, JsonErrors) {
  const fs::path dir = Scratch("json");
  const Outcome r = Exec("--json-errors mine --data /nonexistent.csv --label-col y --score-col p",
                     dir);
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.err);
  EXPECT_EQ(j["error"]["kind"], "parse_error");
  const Outcome bad = Exec("--json-errors mine " + DemoArgs() + " --measure f1", dir);
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(nlohmann::json::parse(bad.err)["error"]["kind"], "invalid_argument");
}

TEST(Cli, ConfigFileWithCommandLineOverride) {
  const fs::path dir = Scratch("config");
  {
    std::ofstream cfg(dir / "run.toml");
    cfg << "[mine]\ndata = \"" << kDemo << "\"\nlabel-col = \"label\"\nscore-col = \"score\"\n"
        << "measure = \"arl\"\ntop-k = 3\n";
  }
  const std::string config = "--config \"" + (dir / "run.toml").string() + "\"";
  ASSERT_EQ(Exec(config + " --out-dir \"" + (dir / "a").string() + "\" mine", dir).code, 0);
  EXPECT_EQ(DataRows(dir / "a" / "results.csv"), 3u);
  ASSERT_EQ(Exec(config + " --out-dir \"" + (dir / "b").string() + "\" mine --top-k 2", dir).code,
            0);
  EXPECT_EQ(DataRows(dir / "b" / "results.csv"), 2u);
  const auto j = nlohmann::json::parse(Slurp(dir / "b" / "results.json"));
  EXPECT_EQ(j["search"]["scoring"]["measure"], "arl");
}

TEST(Cli, InjectMatchesGolden) {
  const fs::path dir = Scratch("inject");
  const Outcome r = Exec("--out-dir \"" + (dir / "out").string() + "\" inject " + DemoArgs() +
                         " --seed 5 --min-frac 0.01 --max-frac 0.02",
                     dir);
  ASSERT_EQ(r.code, 0) << r.err;
  ExpectGolden(dir / "out", "inject", {"injected.csv", "injection.json"});
}

TEST(Cli, InjectRequiresSeed) {
  const fs::path dir = Scratch("inject_seed");
  EXPECT_EQ(Exec("inject " + DemoArgs(), dir).code, 2);
}

TEST(Cli, SkewMatchesGolden) {
  const fs::path dir = Scratch("skew");
  const Outcome r = Exec("--out-dir \"" + (dir / "out").string() +
                         "\" skew --measure pr_auc --axis ncr --grid 0.1,0.5,0.9"
                         " --corr 0,0.5 --repeats 5 --seed 2",
                     dir);
  ASSERT_EQ(r.code, 0) << r.err;
  ExpectGolden(dir / "out", "skew", {"skew.csv", "skew.json"});
}

TEST(Cli, BenchMatchesGolden) {
  const fs::path dir = Scratch("bench");
  const Outcome r = Exec("--out-dir \"" + (dir / "out").string() +
                         "\" bench --synthetic 1500 --seed 4 --weights 0,1 --repeats 1 --depth 3",
                     dir);
  ASSERT_EQ(r.code, 0) << r.err;
  ExpectGolden(dir / "out", "bench", {"bench.csv", "bench.json"});
  EXPECT_FALSE(fs::exists(dir / "out" / "bench_timing.csv"));
}

TEST(Cli, SynthIsDeterministic) {
  const fs::path dir = Scratch("synth");
  ASSERT_EQ(Exec("synth --rows 200 --seed 9 --out \"" + (dir / "a.csv").string() + "\"", dir).code,
            0);
  ASSERT_EQ(Exec("synth --rows 200 --seed 9 --out \"" + (dir / "b.csv").string() + "\"", dir).code,
            0);
  EXPECT_EQ(Slurp(dir / "a.csv"), Slurp(dir / "b.csv"));
  EXPECT_EQ(DataRows(dir / "a.csv"), 200u);
}

}  // namespace
