// Copyright 2026 The iopsim Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "iopsim/cli.hpp"
#include "iopsim/serialize.hpp"

namespace iopsim {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<const char*> args) {
  args.insert(args.begin(), "iopsim");
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

TEST(Cli, RunEmitsPassingReport) {
  const Result r = run({"run", "spin-one"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("scenario"), "spin-one");
  EXPECT_TRUE(j.at("all_passed").get<bool>());
}

TEST(Cli, FailingCheckExitsTwo) {
  // Raising a negative control's threshold above its residual makes it fail.
  const Result ctrl = run({"--tol", "cat.coherence_control=10", "run", "cat", "--steps", "5"});
  EXPECT_EQ(ctrl.code, cli::kExitCheckFailed);
  EXPECT_NE(ctrl.err.find("FAIL cat.coherence_control"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"run"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"run", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"run", "cat", "--grid", "64"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"run", "cat", "--p-plus", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--tol", "cat.nope=1", "run", "cat"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--tol", "cat.condensed_form", "run", "cat"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--hbar", "-1", "run", "cat"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("IOPSIM_SEED", "77", 1);
  const Result env = run({"run", "stern-gerlach", "--samples", "500"});
  ::unsetenv("IOPSIM_SEED");
  const Result flag = run({"--seed", "77", "run", "stern-gerlach", "--samples", "500"});
  const Result other = run({"--seed", "78", "run", "stern-gerlach", "--samples", "500"});
  EXPECT_EQ(env.out, flag.out);
  EXPECT_NE(flag.out, other.out);
  ::setenv("IOPSIM_SEED", "x1", 1);
  EXPECT_EQ(run({"run", "cat"}).code, cli::kExitUsage);
  ::unsetenv("IOPSIM_SEED");
}

TEST(Cli, ValidateReportsResidualsPerOperator) {
  const auto good = temp_file("iopsim_good.json", R"({"dim": 2, "entries": [[0.5,0],[0,0],[0,0],[0.5,0]]})");
  const auto mixed = temp_file("iopsim_mixed.json",
                               R"({"operators": [{"dim": 1, "entries": [[1,0]]}, {"dim": 1, "entries": [[0.5,0]]}]})");
  const auto broken = temp_file("iopsim_broken.json", R"({"dim": 2, "entries": [[1,0]]})");
  const Result ok = run({"validate", good.c_str()});
  EXPECT_EQ(ok.code, cli::kExitOk);
  EXPECT_NE(ok.out.find("valid"), std::string::npos);
  const Result bad = run({"--json", "validate", mixed.c_str()});
  EXPECT_EQ(bad.code, cli::kExitCheckFailed);
  const Json j = Json::parse(bad.out);
  EXPECT_EQ(j.at("operators")[1].at("error"), "TraceNotOne");
  EXPECT_NEAR(j.at("operators")[1].at("trace_residual").get<double>(), 0.5, 1e-15);
  EXPECT_EQ(run({"validate", broken.c_str()}).code, cli::kExitUsage);
  EXPECT_EQ(run({"validate", "/nonexistent/file.json"}).code, cli::kExitUsage);
}

TEST(Cli, SelftestSmallRun) {
  const Result r = run({"--json", "selftest", "--trials", "5", "--steps", "3"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out;
  EXPECT_TRUE(Json::parse(r.out).at("all_passed").get<bool>());
}

TEST(Cli, OutFileAndBinaryExitCode) {
  const auto path = std::filesystem::temp_directory_path() / "iopsim_cat.json";
  const Result r = run({"--out", path.c_str(), "run", "cat"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find(path.string()), std::string::npos);
  std::ifstream in(path);
  EXPECT_TRUE(Json::parse(in).at("all_passed").get<bool>());
  const std::string cmd = std::string(IOPSIM_CLI_PATH) + " run nope > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), cli::kExitUsage);
}

}  // namespace
}  // namespace iopsim
