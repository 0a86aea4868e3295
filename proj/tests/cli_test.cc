// cli_test.cc
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

#include "bipos/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bipos/model_io.h"
#include "json.hpp"
#include "support.h"

namespace bipos {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bipos_cli_test_" + std::string(
                ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }

  nlohmann::json ReadJson(const fs::path& p) {
    std::ifstream in(p);
    return nlohmann::json::parse(in);
  }

  std::string Micro() const { return testing::DataPath("fixtures/micro/corpus.txt"); }
  std::string MicroMap() const { return testing::DataPath("fixtures/micro/micro.map"); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, UniformBddad) {
  const std::string map = testing::DataPath("fixtures/bddad/symbols.map");
  ASSERT_EQ(Run({"train", "--kind", "uniform", "--corpus",
                 testing::DataPath("fixtures/bddad/train.txt"), "--tagmap", map, "--out",
                 dir_.string()}),
            0)
      << err_.str();
  ASSERT_EQ(Run({"eval", "--model", (dir_ / "model.json").string(), "--test",
                 testing::DataPath("fixtures/bddad/test.txt"), "--tagmap", map, "--out",
                 dir_.string()}),
            0)
      << err_.str();
  const auto j = ReadJson(dir_ / "eval.json");
  EXPECT_DOUBLE_EQ(j["result"]["pp"].get<double>(), 4.0);
  EXPECT_DOUBLE_EQ(j["result"]["ltp"].get<double>(), -10.0);
  EXPECT_TRUE(j.contains("metadata"));
  std::ifstream csv(dir_ / "eval_records.csv");
  std::string first;
  std::getline(csv, first);
  EXPECT_EQ(first.rfind("# ", 0), 0u);
}

TEST_F(CliTest, TrainThenAnalyzeWritesEveryReport) {
  ASSERT_EQ(Run({"train", "--corpus", Micro(), "--tagmap", MicroMap(), "--n-train", "1500",
                 "--regime", "new", "--out", dir_.string()}),
            0)
      << err_.str();
  const LoadedModel m = LoadModel(dir_ / "model.json");
  EXPECT_EQ(m.model->kind(), "bipos");
  EXPECT_TRUE(m.metadata.contains("inputs"));
  ASSERT_EQ(Run({"analyze", "--model", (dir_ / "model.json").string(), "--corpus", Micro(),
                 "--tagmap", MicroMap(), "--n-train", "1500", "--out", dir_.string()}),
            0)
      << err_.str();
  for (const char* f : {"impact_prev_tag", "following_tag", "unknown_impact", "components",
                        "word_given_tag", "zipf", "rare_words"}) {
    EXPECT_TRUE(fs::exists(dir_ / (std::string(f) + ".csv"))) << f;
  }
  ASSERT_EQ(Run({"analyze", "--model", (dir_ / "model.json").string(), "--corpus", Micro(),
                 "--tagmap", MicroMap(), "--n-train", "1500", "--reports", "zipf",
                 "--format", "json", "--out", dir_.string()}),
            0);
  EXPECT_EQ(ReadJson(dir_ / "zipf.json")["rows"][0]["key_fraction"], "0");
}

TEST_F(CliTest, SweepAndLambdaSearch) {
  ASSERT_EQ(Run({"sweep", "--corpus", Micro(), "--tagmap", MicroMap(), "--n-train", "1500",
                 "--sizes", "500,1000,1500", "--fixed-vocab", "--threads", "2", "--out",
                 dir_.string()}),
            0)
      << err_.str();
  std::ifstream sweep(dir_ / "sweep.csv");
  std::string line;
  std::size_t data = 0;
  while (std::getline(sweep, line)) data += !line.empty() && line[0] != '#';
  EXPECT_EQ(data, 4u);  // header and three sizes

  ASSERT_EQ(Run({"lambda-search", "--corpus", Micro(), "--tagmap", MicroMap(), "--n-train",
                 "1500", "--variable", "singular", "--out", dir_.string()}),
            0)
      << err_.str();
  const auto j = ReadJson(dir_ / "lambda_search.json");
  EXPECT_GE(j["result"]["ltp"].get<double>(), j["result"]["base_ltp"].get<double>());
}

TEST_F(CliTest, ConfigFileWithFlagOverride) {
  const fs::path cfg = dir_ / "run.cfg";
  std::ofstream(cfg) << "corpus=" << Micro() << "\ntagmap=" << MicroMap()
                     << "\nn-train=1500\nc2=0.01\n";
  ASSERT_EQ(Run({"train", "--config", cfg.string(), "--c2", "0.001", "--out", dir_.string()}), 0)
      << err_.str();
  const auto j = ReadJson(dir_ / "train_summary.json");
  EXPECT_DOUBLE_EQ(j["summary"]["c2"].get<double>(), 0.001);
  EXPECT_EQ(j["summary"]["tokens"].get<std::size_t>(), 1500u);
}

TEST_F(CliTest, ErrorsReturnNonZero) {
  EXPECT_NE(Run({}), 0);
  EXPECT_NE(Run({"train", "--corpus", "/nonexistent", "--out", dir_.string()}), 0);
  EXPECT_NE(err_.str().find("bipos train"), std::string::npos);
  EXPECT_NE(Run({"train", "--corpus", Micro(), "--tagmap", MicroMap(), "--kind", "bogus",
                 "--out", dir_.string()}),
            0);
  EXPECT_NE(Run({"frobnicate"}), 0);
}

}  // namespace
}  // namespace bipos
