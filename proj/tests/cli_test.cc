// Copyright 2026 The c72lab Authors.
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

#include "c72/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "c72/export.h"
#include "c72/simulate.h"
#include "json.hpp"

namespace c72 {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("c72_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, BuildHdl) {
  Result r = cli({"build", "compressor72_proposed", "--format", "hdl", "--out",
                  path("c.v")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::string hdl = read_file(path("c.v"));
  EXPECT_NE(hdl.find("module compressor72_proposed"), std::string::npos);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], "1.0");
  EXPECT_EQ(j["manifest"]["report_paths"][0], path("c.v"));
}

TEST_F(CliTest, BuildJsonRoundTrips) {
  Result r = cli({"export", "kogge_stone", "--width", "4", "--out",
                  path("k.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Circuit c = from_json(read_file(path("k.json")));
  EXPECT_EQ(c.name(), "kogge_stone_4");
}

TEST_F(CliTest, BuildDotAnnotated) {
  Result r = cli({"build", "adjusted_fa", "--format", "dot", "--annotate",
                  "--out", path("a.dot")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(read_file(path("a.dot")).find("Sum (4)"), std::string::npos);
}

TEST_F(CliTest, BuildErrors) {
  EXPECT_EQ(cli({"build", "nosuchblock", "--out", path("x")}).code, kExitUsage);
  Result r = cli({"build", "kogge_stone", "--width", "0", "--out", path("x")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("width"), std::string::npos);
  EXPECT_EQ(cli({"build", "sorter2", "--format", "vhdl", "--out", path("x")})
                .code,
            kExitUsage);
  EXPECT_EQ(cli({"build", "sorter2", "--out", path("missing/dir/x.json")}).code,
            kExitIo);
}

TEST_F(CliTest, VerifyExhaustive) {
  Result r = cli({"verify", "compressor72_proposed", "--exhaustive"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"], "pass");
  EXPECT_EQ(j["vectors_tried"], 512);
  EXPECT_EQ(j["manifest"]["tool_version"], "0.1.0");
}

TEST_F(CliTest, VerifyRandomPipeline) {
  Result r = cli({"verify", "pipeline", "--cols", "8", "--random", "--seed",
                  "1", "--count", "100000"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["seed"], 1);
  EXPECT_EQ(j["manifest"]["seeds"][0], 1);
}

TEST_F(CliTest, VerifyExhaustiveRefusesWideBlock) {
  Result r = cli({"verify", "pipeline", "--exhaustive"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("random"), std::string::npos);
}

TEST_F(CliTest, VerifyFailureExitsOne) {
  Result r = cli({"verify", "half_sorter4", "--oracle", "sorter"});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"], "fail");
  EXPECT_TRUE(j.contains("counterexample"));
}

TEST_F(CliTest, VerifyCoutIndependence) {
  Result r = cli({"verify", "compressor72_cascade", "--oracle",
                  "cout-independence"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(cli({"verify", "sorter2", "--oracle", "cout-independence"}).code,
            kExitUsage);
}

TEST_F(CliTest, VerifyReportToFile) {
  Result r = cli({"verify", "sfa", "--out", path("v.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto j = nlohmann::json::parse(read_file(path("v.json")));
  EXPECT_EQ(j["vectors_tried"], 16);
}

TEST_F(CliTest, ReportsAreReproducible) {
  std::vector<std::string> args = {"verify", "pipeline", "--cols", "4",
                                   "--random", "--seed", "7", "--count",
                                   "2000"};
  EXPECT_EQ(cli(args).out, cli(args).out);
  std::vector<std::string> serial = args;
  serial.push_back("--serial");
  auto a = nlohmann::json::parse(cli(args).out);
  auto b = nlohmann::json::parse(cli(serial).out);
  a.erase("manifest");
  b.erase("manifest");
  EXPECT_EQ(a, b);
}

TEST_F(CliTest, Depth) {
  Result r = cli({"depth", "traditional_fa"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["depth"], 4);
  EXPECT_NE(r.err.find("Carry"), std::string::npos);

  r = cli({"depth", "compressor72_proposed"});
  EXPECT_LE(nlohmann::json::parse(r.out)["depth"].get<int>(), 11);
}

TEST_F(CliTest, DepthWithArrivals) {
  Result r = cli({"depth", "adjusted_fa", "--arrival", "C=2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["output_arrivals"]["Sum"], 4);
  EXPECT_EQ(j["input_arrivals"]["C"], 2);
  EXPECT_EQ(cli({"depth", "adjusted_fa", "--arrival", "D=2"}).code, kExitUsage);
  EXPECT_EQ(cli({"depth", "adjusted_fa", "--arrival", "C"}).code, kExitUsage);
  EXPECT_EQ(cli({"depth", "adjusted_fa", "--arrival", "C=-1"}).code,
            kExitUsage);
  EXPECT_EQ(cli({"depth", "adjusted_fa", "--inv-cost", "3"}).code, kExitUsage);
}

TEST_F(CliTest, Compare) {
  Result r = cli({"compare", "compressor72_proposed", "compressor72_cascade"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"][0]["depth"], 10);
  EXPECT_EQ(j["rows"][1]["depth"], 12);
  EXPECT_EQ(j["manifest"]["blocks"].size(), 2u);
  EXPECT_EQ(cli({"compare", "sfa"}).code, kExitUsage);
}

TEST_F(CliTest, ListAndVersions) {
  Result r = cli({"list"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["generators"].size(), 12u);
  r = cli({"--schema-version"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1.0\n");
  r = cli({"--version"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("0.1.0"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "sfa", "--exhaustive", "--random"}).code,
            kExitUsage);
  EXPECT_EQ(cli({"verify", "sfa", "--random", "--count", "0"}).code,
            kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace c72
