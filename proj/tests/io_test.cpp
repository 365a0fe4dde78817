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

#include "arrowsimp/io.hpp"

#include <filesystem>

#include "arrowsimp/constructions.hpp"
#include "arrowsimp/verify.hpp"
#include "gtest/gtest.h"

namespace arrowsimp {
namespace {

ParseError parse_error_of(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a ParseError";
  return ParseError(0, 0, "none");
}

constexpr char kPaley7Trn[] =
    "7\n"
    "0110100\n"
    "0011010\n"
    "0001101\n"
    "1000110\n"
    "0100011\n"
    "1010001\n"
    "1101000\n";

TEST(TrnTest, FrozenPaley7) {
  EXPECT_EQ(to_trn(paley_tournament(7)), kPaley7Trn);
  EXPECT_EQ(parse_trn(kPaley7Trn), paley_tournament(7));
}

TEST(TrnTest, TrailingNewlineIsOptional) {
  EXPECT_EQ(parse_trn("2\n01\n00"), parse_trn("2\n01\n00\n"));
  EXPECT_EQ(parse_trn("1\n0\n").order(), 1);
}

TEST(TrnTest, RoundTripsRandomTournaments) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Tournament t =
        random_tournament(1 + static_cast<int>(seed % 64), seed);
    EXPECT_EQ(parse_trn(to_trn(t)), t);
  }
  const Tournament wide = random_tournament(64, 9);
  EXPECT_EQ(parse_trn(to_trn(wide)), wide);
}

TEST(TrnTest, ErrorsCarryLineAndColumn) {
  struct Case {
    const char* text;
    int line;
    int column;
  };
  const Case cases[] = {
      {"", 1, 1},
      {"x\n", 1, 1},
      {"3x\n", 1, 2},
      {"0\n", 1, 1},
      {"65\n", 1, 1},
      {"3\n011\n001\n", 4, 1},
      {"2\n01\n00\n00\n", 4, 1},
      {"2\n01\n00\n\n", 4, 1},
      {"2\n01\n0\n", 3, 2},
      {"2\n012\n00\n", 2, 3},
      {"2\n0a\n00\n", 2, 2},
      {"2\n11\n00\n", 2, 1},
      {"2\n01\n10\n", 2, 2},
      {"2\n00\n00\n", 2, 2},
      {"3\n011\n001\n100\n", 2, 3},
      {"2\r\n01\n00\n", 1, 2},
      {"2\n01\n00\r\n", 3, 3},
  };
  for (const Case& c : cases) {
    const ParseError e = parse_error_of([&] { parse_trn(c.text); });
    EXPECT_EQ(e.line(), c.line) << c.text;
    EXPECT_EQ(e.column(), c.column) << c.text;
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
}

TEST(MatrixTextTest, FrozenOrder4) {
  const std::string text = to_matrix_text(dr_to_skew_hadamard(paley_tournament(3)));
  EXPECT_EQ(text,
            "4\n"
            "+1 +1 +1 +1\n"
            "-1 +1 +1 -1\n"
            "-1 -1 +1 +1\n"
            "-1 +1 -1 +1\n");
  EXPECT_EQ(to_matrix_text(parse_matrix_text(text)), text);
}

TEST(MatrixTextTest, RoundTripsEveryPaleyOrder) {
  for (int q : {3, 7, 11, 19, 23}) {
    const std::string text = to_matrix_text(dr_to_skew_hadamard(paley_tournament(q)));
    const SkewHadamard h = parse_matrix_text(text);
    EXPECT_TRUE(h.satisfies_invariants());
    EXPECT_EQ(to_matrix_text(h), text);
    EXPECT_EQ(to_trn(skew_hadamard_to_dr(h)), to_trn(paley_tournament(q)));
  }
}

TEST(MatrixTextTest, Errors) {
  EXPECT_EQ(parse_error_of([] { parse_matrix_text("2\n+1 +1\n-1 +2\n"); })
                .column(),
            4);
  EXPECT_EQ(parse_error_of([] { parse_matrix_text("2\n+1 +1\n-1\n"); }).line(),
            3);
  EXPECT_EQ(parse_error_of([] { parse_matrix_text("2\n+1 +1\n"); }).line(), 3);
  EXPECT_EQ(parse_error_of([] { parse_matrix_text("2\n+1  +1\n-1 +1\n"); })
                .column(),
            4);
  // Non-Hadamard input parses; the bridge rejects it.
  const SkewHadamard h = parse_matrix_text("2\n+1 +1\n+1 +1\n");
  EXPECT_FALSE(h.satisfies_invariants());
}

TEST(JsonTest, SimplicityReportRoundTrip) {
  for (const Tournament& t :
       {paley_tournament(7), transitive_tournament(5), random_tournament(9, 4)}) {
    const SimplicityReport r = arrow_simplicity(t);
    const Json j = to_json(r);
    const SimplicityReport back = simplicity_report_from_json(j);
    EXPECT_EQ(to_json(back).dump(), j.dump());
    EXPECT_EQ(back.witness_arcs, r.witness_arcs);
    EXPECT_EQ(back.witness_module, r.witness_module);
  }
}

TEST(JsonTest, SimplicityReportKeyOrderIsFixed) {
  const Json j = to_json(arrow_simplicity(paley_tournament(7)));
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "order", "s", "exact", "simple", "witness_module",
                      "witness_arcs", "min_degree", "min_separators",
                      "theorem1_bound", "subsets_examined", "subsets_pruned"}));
  EXPECT_EQ(j["s"], 3);
  EXPECT_EQ(j["witness_module"].dump(), "[0,1]");
  EXPECT_EQ(j["witness_arcs"].dump(), "[[0,4],[1,3],[1,5]]");
}

TEST(JsonTest, SuiteReportRoundTripWithWitness) {
  const Tournament p7 = paley_tournament(7);
  SimplicityReport forged = arrow_simplicity(p7);
  forged.s = 4;
  const SuiteReport r = bound_suite(p7, forged, "forged");
  ASSERT_FALSE(r.passed());
  const Json j = to_json(r);
  const SuiteReport back = suite_report_from_json(j);
  EXPECT_EQ(to_json(back).dump(), j.dump());
  EXPECT_EQ(back.first_failure()->tournament, p7);
  EXPECT_EQ(back.first_failure()->instance, "forged");
}

TEST(JsonTest, ReportEnvelope) {
  const Json with_seed =
      make_report("verify", 7, Json{{"suite", "x"}}, Json::array());
  EXPECT_EQ(with_seed.dump(),
            R"({"tool_version":"0.1.0","command":"verify","seed":7,)"
            R"("input":{"suite":"x"},"results":[]})");
  const Json without = make_report("analyze", std::nullopt, Json("f.trn"),
                                   Json::array());
  EXPECT_FALSE(without.contains("seed"));
}

TEST(CsvTest, OneRowPerCheckWithQuoting) {
  SuiteReport r;
  r.suite = "demo";
  r.record("ok", true, Witness{"unused", "", std::nullopt});
  r.record("bad", false, Witness{"inst, 1", "said \"no\"", std::nullopt});
  EXPECT_EQ(to_csv(r),
            "suite,check,instances,failures,passed,witness_instance,"
            "witness_detail\n"
            "demo,ok,1,0,true,,\n"
            "demo,bad,1,1,false,\"inst, 1\",\"said \"\"no\"\"\"\n");
}

TEST(FileTest, ReadWriteAndErrors) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "arrowsimp_io_test";
  std::filesystem::create_directories(dir);
  const std::filesystem::path p = dir / "t.trn";
  write_text_file(p, kPaley7Trn);
  EXPECT_EQ(read_text_file(p), kPaley7Trn);
  try {
    read_text_file(dir / "missing.trn");
    ADD_FAILURE() << "expected an Error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace arrowsimp
