// Copyright 2026 The sberez Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const char* exe = std::getenv("SBEREZ_CLI");
  if (!exe) return {};
  std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json strip_durations(json j) {
  for (auto& c : j["checks"]) c.erase("duration_ms");
  return j;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!std::getenv("SBEREZ_CLI")) GTEST_SKIP() << "SBEREZ_CLI not set";
  }
};

TEST_F(Cli, VerifyPassingSuiteAsJson) {
  CliRun r = run("verify rmatrix --m 1 --n 1 --format json");
  EXPECT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["suite"], "rmatrix");
  EXPECT_EQ(j["m"], 1);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_GT(j["summary"]["pass"].get<int>(), 0);
  for (const auto& c : j["checks"]) EXPECT_NE(c["status"], "fail") << c["name"];
}

TEST_F(Cli, VerifyTextSummary) {
  CliRun r = run("verify hecke --m 1 --n 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("summary: "), std::string::npos) << r.out;
}

TEST_F(Cli, FailingSuiteExitsOne) {
  // Crossing with D as displayed does not hold for (2|1).
  CliRun r = run("verify rmatrix --m 2 --n 1 --format json");
  EXPECT_EQ(r.code, 1);
  json j = json::parse(r.out);
  EXPECT_GT(j["summary"]["fail"].get<int>(), 0);
}

TEST_F(Cli, ComputeBerezinianSymbolic) {
  CliRun r = run("compute berezinian --m 1 --n 1 --rep eval --a 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(-q*z + 2*q)/(2*q^2 - z)"), std::string::npos) << r.out;
}

TEST_F(Cli, ComputeBerezinianAtNumericQ) {
  CliRun r = run("compute berezinian --m 1 --n 1 --rep eval --a 2 --q 3 --format json");
  EXPECT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["object"], "berezinian");
  EXPECT_EQ(j["rep"]["type"], "eval");
  EXPECT_EQ(j["value"], "(3*z - 6)/(z - 18)");
}

TEST_F(Cli, ComputeZetaAndHCImage) {
  EXPECT_EQ(run("compute zeta --m 1 --n 1 --a 2 --q 2").code, 0);
  CliRun h = run("compute hc-image --m 1 --n 1 --order 0");
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("l+[1,1,0]*l+inv[2,2,0]"), std::string::npos) << h.out;
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("verify all --m 0 --n 0").code, 2);
  EXPECT_EQ(run("verify bogus --m 1 --n 1").code, 2);
  EXPECT_EQ(run("verify rmatrix --m 3 --n 2").code, 2);
  EXPECT_EQ(run("verify rmatrix --m 1 --n 1 --format yaml").code, 2);
  EXPECT_EQ(run("compute berezinian --m 1 --n 1 --a x").code, 2);
}

TEST_F(Cli, HelpExitsZero) {
  CliRun r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST_F(Cli, DeterministicAcrossThreadCounts) {
  CliRun a = run("verify zeta --m 1 --n 1 --seed 7 --format json --threads 1");
  CliRun b = run("verify zeta --m 1 --n 1 --seed 7 --format json --threads 4");
  ASSERT_EQ(a.code, b.code);
  EXPECT_EQ(strip_durations(json::parse(a.out)), strip_durations(json::parse(b.out)));
}

}  // namespace
