// Copyright 2026 The stcvrp Authors
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtest/gtest.h"
#include "stcvrp/instance_io.h"

namespace stcvrp::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("stcvrp_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Cli(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    args.insert(args.begin(), "stcvrp");
    return cli::Run(args, out_, err_);
  }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string Line3() {
    return Write("line3.stcvrp",
                 "STCVRP 1\nNAME line3\nVEHICLES 2\nSPEED 5\nSERVICE_TIME 8\n"
                 "WMAX 8\nDMAX 150\nDEPOT 0 0\nNODES 3\n1 40 0\n2 80 0\n"
                 "3 -40 0\nEOF\n");
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, GenerateWritesNamedInstanceAndManifest) {
  ASSERT_EQ(Cli({"generate", "--pattern", "grid", "--n", "25", "--k", "5",
                 "--dmax", "150", "--seed", "3", "--out", dir_.string()}),
            kExitOk)
      << err_.str();
  const fs::path inst = dir_ / "G25_5k_150d.stcvrp";
  EXPECT_TRUE(fs::exists(inst));
  EXPECT_EQ(ReadInstanceFile(inst.string()).num_tasks(), 25);
  std::ifstream mf(dir_ / "G25_5k_150d.manifest.json");
  const json manifest = json::parse(mf);
  EXPECT_EQ(manifest["command"], "generate");
  EXPECT_TRUE(manifest.contains("version"));
  EXPECT_TRUE(manifest.contains("wall_clock_s"));
}

TEST_F(CliTest, GenerateRequiresN) {
  EXPECT_EQ(Cli({"generate", "--pattern", "grid", "--k", "2", "--dmax", "150",
                 "--out", dir_.string()}),
            kExitUsage);
}

TEST_F(CliTest, GenerateFromCoordinates) {
  const std::string coords =
      Write("tiny.tsp", "NODE_COORD_SECTION\n1 0 0\n2 10 0\n3 0 10\n4 10 10\nEOF\n");
  ASSERT_EQ(Cli({"generate", "--pattern", "R", "--from", coords, "--k", "2",
                 "--dmax", "100", "--out", dir_.string()}),
            kExitOk)
      << err_.str();
  EXPECT_TRUE(fs::exists(dir_ / "R4_2k_100d.stcvrp"));
}

TEST_F(CliTest, SolveWritesResultsAndConvergence) {
  const std::string inst = Line3();
  ASSERT_EQ(Cli({"solve", "--instance", inst, "--runs", "2", "--seed", "5",
                 "--stagnation", "30", "--out", dir_.string()}),
            kExitOk)
      << err_.str();
  const json aggregate = json::parse(out_.str());
  EXPECT_EQ(aggregate["best"], 48.0);
  EXPECT_EQ(aggregate["runs"], 2);
  std::ifstream rf(dir_ / "line3_results.json");
  const json results = json::parse(rf);
  ASSERT_EQ(results["runs"].size(), 2u);
  EXPECT_EQ(results["runs"][1]["seed"], 6);
  EXPECT_TRUE(fs::exists(dir_ / "line3_seed5_convergence.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "line3_seed6_convergence.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "line3_results.manifest.json"));
}

TEST_F(CliTest, SolveIsReproducible) {
  const std::string inst = Line3();
  const std::vector<std::string> args{"solve", "--instance", inst, "--seed", "9",
                                      "--stagnation", "20", "--no-timing",
                                      "--out", dir_.string()};
  ASSERT_EQ(Cli(args), kExitOk);
  std::ifstream a(dir_ / "line3_results.json");
  const std::string first((std::istreambuf_iterator<char>(a)), {});
  ASSERT_EQ(Cli(args), kExitOk);
  std::ifstream b(dir_ / "line3_results.json");
  const std::string second((std::istreambuf_iterator<char>(b)), {});
  EXPECT_EQ(first, second);
}

TEST_F(CliTest, EvaluatePrintsSchedule) {
  const std::string inst = Line3();
  const std::string sol = Write("sol.json", R"({"routes": [[1, 2], [3]]})");
  ASSERT_EQ(Cli({"evaluate", "--instance", inst, "--solution", sol}), kExitOk)
      << err_.str();
  const json doc = json::parse(out_.str());
  EXPECT_EQ(doc["makespan"], 48.0);
  EXPECT_EQ(doc["tasks"].size(), 3u);
}

TEST_F(CliTest, EvaluateRejectsEmptyRoute) {
  const std::string inst = Line3();
  const std::string sol = Write("sol.json", R"({"routes": [[1, 2, 3], []]})");
  EXPECT_EQ(Cli({"evaluate", "--instance", inst, "--solution", sol}), kExitUsage);
  EXPECT_FALSE(err_.str().empty());
}

TEST_F(CliTest, ValidateReportsViolations) {
  const std::string inst = Line3();
  const std::string sol = Write("sol.json", R"({"routes": [[1], [3, 2]]})");
  ASSERT_EQ(Cli({"validate", "--instance", inst, "--solution", sol}), kExitOk);
  EXPECT_NE(out_.str().find("feasible"), std::string::npos);

  ASSERT_EQ(Cli({"evaluate", "--instance", inst, "--solution", sol}), kExitOk);
  json schedule = json::parse(out_.str());
  // Move task 3 so that it overlaps task 1 without the required gap.
  for (json& t : schedule["tasks"]) {
    if (t["task"] == 3) {
      t["start"] = 8.0;
      t["wait"] = 0.0;
      t["end"] = 16.0;
    }
  }
  const std::string bad = Write("bad.json", schedule.dump());
  EXPECT_EQ(Cli({"validate", "--instance", inst, "--solution", sol,
                 "--schedule", bad}),
            kExitValidationFailure);
  EXPECT_NE(out_.str().find("infeasible"), std::string::npos);
}

TEST_F(CliTest, ExportMilpWritesLp) {
  const std::string inst = Line3();
  const std::string lp = (dir_ / "line3.lp").string();
  ASSERT_EQ(Cli({"export-milp", "--instance", inst, "--out", lp}), kExitOk)
      << err_.str();
  std::ifstream in(lp);
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_NE(text.find("Minimize"), std::string::npos);
  EXPECT_NE(text.find("End"), std::string::npos);
  EXPECT_NE(text.find("y_1_2"), std::string::npos);
  ASSERT_EQ(Cli({"export-milp", "--instance", inst, "--out", lp, "--literal"}),
            kExitOk);
  std::ifstream in2(lp);
  const std::string literal((std::istreambuf_iterator<char>(in2)), {});
  EXPECT_EQ(literal.find("y_1_2"), std::string::npos);
  EXPECT_EQ(Cli({"export-milp", "--instance", inst, "--bigm", "1"}), kExitUsage);
}

TEST_F(CliTest, BruteForce) {
  const std::string inst = Line3();
  ASSERT_EQ(Cli({"brute-force", "--instance", inst}), kExitOk) << err_.str();
  const json doc = json::parse(out_.str());
  EXPECT_EQ(doc["makespan"], 48.0);
  EXPECT_EQ(doc["routes"], json::parse("[[1,2],[3]]"));
  EXPECT_EQ(Cli({"brute-force", "--instance", inst, "--limit", "5"}), kExitUsage);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Cli({"--help"}), kExitOk);
  EXPECT_EQ(Cli({"bogus"}), kExitUsage);
  EXPECT_EQ(Cli({"evaluate", "--instance", (dir_ / "missing.stcvrp").string(),
                 "--solution", "x.json"}),
            kExitIo);
  const std::string broken = Write("broken.stcvrp", "STCVRP 1\nNAME x\n");
  EXPECT_EQ(Cli({"brute-force", "--instance", broken}), kExitIo);
}

}  // namespace
}  // namespace stcvrp::cli
