// Copyright 2026 The nonsep Authors
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
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(NONSEP_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("nonsep_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  std::filesystem::path dir_;
};

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--bogus").code, 2);
  EXPECT_EQ(run("find --graph " + path("missing.g6") + " --paths 1").code, 2);
  EXPECT_EQ(run("verify-theorem --id T1.4 --m 1 --kappa 3 --count 1").code, 2);
  EXPECT_EQ(run("verify-theorem --id nope --m 1").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(CliTest, GenFindCheck) {
  const CliRun gen = run("gen --family complete -n 9");
  ASSERT_EQ(gen.code, 0);
  EXPECT_EQ(gen.out, "H~~~~~~\n");
  const CliRun two = run("gen --family random -n 6 --kappa 3 --count 2");
  EXPECT_EQ(std::count(two.out.begin(), two.out.end(), '\n'), 2);
  write("k9.g6", gen.out);

  const CliRun find = run("find --graph " + path("k9.g6") +
                       " --cycle --edges '0-1 2-3' --avoid 8 --residual 1 --engine both -o " + path("cert.json"));
  ASSERT_EQ(find.code, 0) << find.out;
  EXPECT_EQ(run("find --graph " + path("k9.g6") + " --edges 0-1 2-3 --avoid 4 --residual 1 --engine both").code, 0);
  const auto cert = nlohmann::json::parse(std::ifstream(path("cert.json")));
  EXPECT_EQ(cert["kind"], "cycle");
  EXPECT_EQ(cert["graph6"], "H~~~~~~");

  const CliRun ok = run("check " + path("cert.json"));
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("valid cycle certificate", 0), 0U) << ok.out;

  auto tampered = cert;
  tampered["payload"]["cycle"][1] = 8;
  write("bad.json", tampered.dump());
  const CliRun bad = run("check " + path("bad.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out.rfind("invalid:", 0), 0U) << bad.out;

  write("garbage.json", "{not json");
  const CliRun garbage = run("check " + path("garbage.json"));
  EXPECT_EQ(garbage.code, 1);
  EXPECT_EQ(garbage.out.rfind("invalid: malformed JSON", 0), 0U);
}

TEST_F(CliTest, FindWithoutSolutionExitsOne) {
  write("p3.txt", "3 2\n0 2\n2 1\n");
  const CliRun r = run("find --graph " + path("p3.txt") + " --paths 1 --terminals 0 1 --avoid 2 --residual 1");
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, WitnessCommand) {
  write("p5.txt", "5 4\n0 1\n1 2\n2 3\n3 4\n");
  const CliRun r = run("witness --graph " + path("p5.txt") + " --bound thm23 --avoid 2 --terminals 0 4");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kind"], "witness");
  EXPECT_EQ(j["payload"]["parts"], nlohmann::json::parse("[[1],[3]]"));
}

TEST_F(CliTest, VerifyTheoremReport) {
  const CliRun r = run("verify-theorem --id T1.3-k1 --m 1 --seed 4 --count 3 --engine both -o " + path("rep.json"));
  ASSERT_EQ(r.code, 0);
  const auto rep = nlohmann::json::parse(std::ifstream(path("rep.json")));
  EXPECT_EQ(rep["summary"]["passed"], 3);
  EXPECT_EQ(rep["instances"].size(), 3U);
  EXPECT_EQ(rep["certificates"].size(), 3U);

  const CliRun again = run("verify-theorem --id T1.3-k1 --m 1 --seed 4 --count 3 --engine both -o " + path("rep2.json"));
  ASSERT_EQ(again.code, 0);
  auto a = rep;
  auto b = nlohmann::json::parse(std::ifstream(path("rep2.json")));
  for (auto* j : {&a, &b}) {
    (*j)["summary"].erase("total_millis");
    for (auto& inst : (*j)["instances"]) inst.erase("millis");
  }
  EXPECT_EQ(a, b);

  const CliRun sweep = run("sweep --id T2.3 --m 0 --n-min 3 --n-max 4");
  EXPECT_EQ(sweep.code, 0);
}

}  // namespace
