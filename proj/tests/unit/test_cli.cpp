// Copyright 2026 The rrcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "rrcc/errors.hpp"
#include "rrcc_cli/cli.hpp"
#include "rrcc_cli/reproduce.hpp"

namespace rrcc::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rrcc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Factor) {
  const Result r = invoke({"--p", "17", "--r", "3", "factor"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("(x + 1)^17"), std::string::npos);
  EXPECT_NE(r.out.find("(x + 8)^17"), std::string::npos);
}

TEST(Cli, RejectsBadPrime) {
  for (const char* p : {"2", "15", "1"}) {
    const Result r = invoke({"--p", p, "--r", "3", "factor"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("p must be an odd prime, got " + std::string(p)), std::string::npos) << r.err;
  }
}

TEST(Cli, CodeText) {
  const Result r = invoke({"--p", "17", "--r", "3", "code", "--gen", "(x+1)^2(x+8)"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("[136,133,3]"), std::string::npos) << r.out;
}

TEST(Cli, CodeJson) {
  const Result r = invoke({"--p", "17", "--r", "3", "--format", "json", "code", "--gen", "(x+1)^2(x+8)"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("n"), 136);
  EXPECT_EQ(j.at("k"), 133);
  EXPECT_EQ(j.at("distance").at("d"), 3);
  EXPECT_EQ(j.at("dual_containing"), true);
}

TEST(Cli, CodeCsvFromExponents) {
  const Result r = invoke({"--p", "17", "--r", "3", "--format", "csv", "code", "--exps", "0:0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("n,k,d,generator,construction,extra\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("MDS_d1"), std::string::npos) << r.out;
}

TEST(Cli, BadGenerator) {
  const Result r = invoke({"--p", "17", "--r", "3", "code", "--gen", "(x+3)"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u) << r.err;
}

TEST(Cli, QuantumConstructions) {
  Result r = invoke({"--p", "17", "--r", "3", "quantum", "css", "--gen", "(x+1)^2(x+8)"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("[[136,130,3]]"), std::string::npos) << r.out;
  r = invoke({"--p", "31", "--r", "3", "quantum", "eaqec", "--gen", "(x+1)^16(x^2+8x+1)"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("[[248,213,4;1]]"), std::string::npos) << r.out;
  r = invoke({"--p", "17", "--r", "3", "quantum", "steane", "--gen", "(x+1)^2(x+8)", "--outer-gen", "(x+1)"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("[[136,132,3]]"), std::string::npos) << r.out;
  r = invoke({"--p", "17", "--r", "3", "quantum", "steane", "--gen", "(x+1)", "--outer-gen", "(x+1)"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("k' >= k+1"), std::string::npos) << r.err;
}

TEST(Cli, ScanDualContainingIsIndependentOfJobs) {
  const Result a = invoke({"--p", "7", "--r", "3", "--jobs", "1", "--format", "csv", "scan", "dual-containing", "--list"});
  const Result b = invoke({"--p", "7", "--r", "3", "--jobs", "4", "--format", "csv", "scan", "dual-containing", "--list"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(a.out, b.out);
  const Result c = invoke({"--p", "7", "--r", "3", "scan", "dual-containing"});
  EXPECT_NE(c.out.find("1024"), std::string::npos) << c.out;
}

TEST(Cli, ScanBudget) {
  const Result r = invoke({"--p", "13", "--r", "3", "--budget", "100", "scan", "dual-containing", "--list"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("budget"), std::string::npos) << r.err;
}

TEST(Cli, ScanQecMdsExhaustive) {
  const Result r = invoke({"--p", "23", "--r", "3", "scan", "qec-mds", "--exhaustive"});
  EXPECT_EQ(r.code, kExitOk) << r.err << r.out;
  EXPECT_NE(r.out.find("[[184,182,2]]"), std::string::npos) << r.out;
}

TEST(Cli, BudgetResolution) {
  EXPECT_EQ(resolve_budget(std::nullopt, nullptr), 10'000'000u);
  EXPECT_EQ(resolve_budget(std::nullopt, "500"), 500u);
  EXPECT_EQ(resolve_budget(7, "500"), 7u);
  EXPECT_THROW(resolve_budget(std::nullopt, "lots"), PreconditionError);
}

TEST(Cli, ReproduceJson) {
  const Result r = invoke({"--format", "json", "reproduce", "all"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto& fixtures = j.at("fixtures");
  EXPECT_EQ(fixtures.size(), fixture_ids().size());
  EXPECT_EQ(j.at("summary").at("mismatch"), 0);
  std::size_t documented = 0;
  for (const auto& fx : fixtures) {
    EXPECT_NE(fx.at("status"), "mismatch") << fx.dump();
    documented += fx.at("status") == "documented-discrepancy";
  }
  EXPECT_GT(documented, 0u);
}

TEST(Cli, ReproduceUnknownFixture) {
  const Result r = invoke({"reproduce", "table9"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(Reproduce, EveryLedgerEntryIsUsed) {
  // A stale entry would turn its check into a mismatch, so each one must be
  // matched by a documented check on the fixture it names.
  for (const auto& e : discrepancy_ledger().at("entries")) {
    const FixtureReport rep = reproduce(e.at("fixture"));
    bool found = false;
    for (const auto& c : rep.checks) found |= c.item == e.at("item") && c.status == Status::Documented;
    EXPECT_TRUE(found) << e.dump();
  }
  for (const auto& id : fixture_ids()) {
    for (const auto& c : reproduce(id).checks) EXPECT_NE(c.status, Status::Mismatch) << id << " " << c.item;
  }
}

}  // namespace
}  // namespace rrcc::cli
