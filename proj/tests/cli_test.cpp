// Copyright 2026 The arrowsimp Authors
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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "arrowsimp/constructions.hpp"
#include "arrowsimp/io.hpp"
#include "gtest/gtest.h"

namespace arrowsimp {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

CliRun run_cli(const std::string& args) {
  const std::string cmd =
      std::string("'") + ARROWSIMP_CLI_PATH + "' " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.output.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("arrowsimp_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenPaley7) {
  const CliRun r = run_cli("gen paley 7 -o " + path("p7.trn"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "n=7 regular")) << r.output;
  const std::string text = read_text_file(path("p7.trn"));
  EXPECT_EQ(text.substr(0, 10), "7\n0110100\n");
  EXPECT_EQ(parse_trn(text), paley_tournament(7));
}

TEST_F(CliTest, GenRandomIsDeterministic) {
  ASSERT_EQ(run_cli("gen random 6 --seed 42 -o " + path("a.trn")).exit_code, 0);
  ASSERT_EQ(run_cli("gen random 6 --seed 42 -o " + path("b.trn")).exit_code, 0);
  EXPECT_EQ(read_text_file(path("a.trn")), read_text_file(path("b.trn")));
  EXPECT_EQ(read_text_file(path("a.trn")), to_trn(random_tournament(6, 42)));
}

TEST_F(CliTest, GenPaleyMinus) {
  const CliRun r = run_cli("gen paley-minus 7 --delete 0 -o " + path("m.trn"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "n=6 near-regular")) << r.output;
}

TEST_F(CliTest, GenErrors) {
  const CliRun bad_q = run_cli("gen paley 5 -o " + path("p5.trn"));
  EXPECT_EQ(bad_q.exit_code, 2);
  EXPECT_TRUE(contains(bad_q.output, "WrongResidueClass")) << bad_q.output;
  EXPECT_FALSE(fs::exists(path("p5.trn")));
  EXPECT_EQ(run_cli("gen hexagon 5 -o " + path("x.trn")).exit_code, 2);
  EXPECT_EQ(run_cli("gen paley 7").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);
}

TEST_F(CliTest, AnalyzePaley7) {
  ASSERT_EQ(run_cli("gen paley 7 -o " + path("p7.trn")).exit_code, 0);
  const CliRun r = run_cli("analyze " + path("p7.trn") + " --exact");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "s = 3\n")) << r.output;
  EXPECT_TRUE(contains(r.output, "doubly regular = yes (k=1)")) << r.output;
  EXPECT_TRUE(contains(r.output, "witness arcs (3) = (0,4) (1,3) (1,5)"))
      << r.output;
}

TEST_F(CliTest, AnalyzeTransitiveAndDeletions) {
  ASSERT_EQ(run_cli("gen transitive 5 -o " + path("t5.trn")).exit_code, 0);
  const CliRun t = run_cli("analyze " + path("t5.trn"));
  ASSERT_EQ(t.exit_code, 0) << t.output;
  EXPECT_TRUE(contains(t.output, "s = 0\n"));
  EXPECT_TRUE(contains(t.output, "witness module = {0,1}")) << t.output;

  ASSERT_EQ(run_cli("gen paley-minus 11 --delete 0,1,2 -o " + path("m.trn"))
                .exit_code,
            0);
  const CliRun m = run_cli("analyze " + path("m.trn") + " --exact --workers 2");
  ASSERT_EQ(m.exit_code, 0) << m.output;
  EXPECT_TRUE(contains(m.output, "s = 2\n")) << m.output;
}

TEST_F(CliTest, AnalyzeJsonReport) {
  ASSERT_EQ(run_cli("gen paley 7 -o " + path("p7.trn")).exit_code, 0);
  const CliRun r = run_cli("analyze " + path("p7.trn") + " --json --out " +
                        path("r.json"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const Json j = Json::parse(r.output);
  EXPECT_EQ(j["tool_version"], "0.1.0");
  EXPECT_EQ(j["command"], "analyze --exact");
  EXPECT_FALSE(j.contains("seed"));
  EXPECT_EQ(j["results"][0]["simplicity"]["s"], 3);
  EXPECT_EQ(j["results"][0]["doubly_regular_k"], 1);
  EXPECT_EQ(Json::parse(read_text_file(path("r.json"))), j);
  const SimplicityReport back =
      simplicity_report_from_json(j["results"][0]["simplicity"]);
  EXPECT_EQ(back.witness_arcs.size(), 3);
}

TEST_F(CliTest, AnalyzeBoundsOnlyBeyondTheCap) {
  ASSERT_EQ(run_cli("gen paley 31 -o " + path("p31.trn")).exit_code, 0);
  const CliRun exact = run_cli("analyze " + path("p31.trn"));
  EXPECT_EQ(exact.exit_code, 2);
  EXPECT_TRUE(contains(exact.output, "TooLarge")) << exact.output;
  const CliRun bounds = run_cli("analyze " + path("p31.trn") + " --bounds-only");
  ASSERT_EQ(bounds.exit_code, 0) << bounds.output;
  EXPECT_TRUE(contains(bounds.output, "s = <= 15\n")) << bounds.output;
  EXPECT_TRUE(contains(bounds.output, "witness arcs (15)")) << bounds.output;
}

TEST_F(CliTest, AnalyzeParseErrorHasPosition) {
  write_text_file(path("bad.trn"), "3\n011\n001\n110\n");
  const CliRun r = run_cli("analyze " + path("bad.trn"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(contains(r.output, "line 2, column 3")) << r.output;
  EXPECT_EQ(run_cli("analyze " + path("missing.trn")).exit_code, 2);
}

TEST_F(CliTest, VerifySuitesPass) {
  const CliRun t1 = run_cli("verify theorem1 --exhaustive 5");
  ASSERT_EQ(t1.exit_code, 0) << t1.output;
  EXPECT_TRUE(contains(t1.output, "theorem1: 1024 instances, all checks pass"))
      << t1.output;
  EXPECT_TRUE(contains(t1.output, "PASS oracle_equivalence (1024 checked"))
      << t1.output;

  const CliRun l = run_cli("verify lakhlifi --q 7");
  ASSERT_EQ(l.exit_code, 0) << l.output;
  EXPECT_TRUE(contains(l.output, "lakhlifi: 7 instances, all checks pass"))
      << l.output;

  const CliRun id = run_cli("verify identities --samples 50 --seed 3");
  ASSERT_EQ(id.exit_code, 0) << id.output;
  EXPECT_TRUE(contains(id.output, "identities: 50 instances")) << id.output;
}

TEST_F(CliTest, VerifyTheorem9) {
  const CliRun r = run_cli("verify theorem9 --q 11 --workers 2");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "theorem9: 220 instances, all checks pass"))
      << r.output;
  EXPECT_TRUE(contains(r.output, "two_deleted s=3: 55")) << r.output;
  EXPECT_TRUE(contains(r.output, "three_deleted s=2: 165")) << r.output;
}

TEST_F(CliTest, VerifyJsonAndCsvAreDeterministic) {
  const std::string args = "verify bounds --n 9 --samples 40 --seed 5 --json";
  const CliRun a = run_cli(args + " --csv " + path("a.csv"));
  const CliRun b = run_cli(args + " --workers 3 --csv " + path("b.csv"));
  ASSERT_EQ(a.exit_code, 0) << a.output;
  ASSERT_EQ(b.exit_code, 0) << b.output;
  EXPECT_EQ(a.output, b.output);
  EXPECT_EQ(read_text_file(path("a.csv")), read_text_file(path("b.csv")));
  const Json j = Json::parse(a.output);
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["command"], "verify bounds");
  EXPECT_EQ(j["results"][0]["instances"], 40);
  EXPECT_TRUE(contains(read_text_file(path("a.csv")),
                       "bounds,theorem1,40,0,true,,\n"));
}

TEST_F(CliTest, VerifyUsageErrors) {
  EXPECT_EQ(run_cli("verify nonsense").exit_code, 2);
  EXPECT_EQ(run_cli("verify theorem1 --exhaustive 8").exit_code, 2);
  EXPECT_EQ(run_cli("verify theorem9 --q 7").exit_code, 2);
}

TEST_F(CliTest, ConvertRoundTrip) {
  ASSERT_EQ(run_cli("gen paley 7 -o " + path("p7.trn")).exit_code, 0);
  const CliRun to_h = run_cli("convert dr-to-hadamard " + path("p7.trn") + " " +
                           path("h.txt"));
  ASSERT_EQ(to_h.exit_code, 0) << to_h.output;
  EXPECT_TRUE(contains(to_h.output, "order 8")) << to_h.output;
  EXPECT_TRUE(parse_matrix_text(read_text_file(path("h.txt")))
                  .satisfies_invariants());
  const CliRun back = run_cli("convert hadamard-to-dr " + path("h.txt") + " " +
                           path("back.trn"));
  ASSERT_EQ(back.exit_code, 0) << back.output;
  EXPECT_EQ(read_text_file(path("back.trn")), read_text_file(path("p7.trn")));
}

TEST_F(CliTest, ConvertRejectsNonDoublyRegular) {
  ASSERT_EQ(run_cli("gen paley-minus 7 --delete 2 -o " + path("m.trn"))
                .exit_code,
            0);
  const CliRun r = run_cli("convert dr-to-hadamard " + path("m.trn") + " " +
                        path("h.txt"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(contains(r.output, "NotDoublyRegular")) << r.output;
  EXPECT_FALSE(fs::exists(path("h.txt")));

  write_text_file(path("bad.txt"), "2\n+1 +1\n+1 +1\n");
  const CliRun bad = run_cli("convert hadamard-to-dr " + path("bad.txt") + " " +
                          path("t.trn"));
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_TRUE(contains(bad.output, "InvariantViolation")) << bad.output;
}

}  // namespace
}  // namespace arrowsimp
