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

// arrowsimp: generate tournaments, compute arrow-simplicity, run the
// verification suites and convert between doubly regular tournaments and
// skew-Hadamard matrices.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage, parse or input error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arrowsimp/constructions.hpp"
#include "arrowsimp/io.hpp"
#include "arrowsimp/modsimp.hpp"
#include "arrowsimp/verify.hpp"

namespace {

using namespace arrowsimp;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::string regularity_name(const Tournament& t) {
  if (t.order() < 2) return "trivial";
  switch (regularity_class(t).kind) {
    case Regularity::Kind::kRegular: return "regular";
    case Regularity::Kind::kNearRegular: return "near-regular";
    case Regularity::Kind::kNeither: break;
  }
  return "neither";
}

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::string arcs_text(const ArcSet& arcs) {
  std::string s;
  for (const Arc& a : arcs) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(a.from) + "," + std::to_string(a.to) + ")";
  }
  return s.empty() ? "(none)" : s;
}

struct GenArgs {
  std::string kind;
  int size = 0;
  std::uint64_t seed = 0;
  std::vector<int> deleted;
  std::string out;
};

int run_gen(const GenArgs& a) {
  Tournament t = [&] {
    if (a.kind == "paley") return paley_tournament(a.size);
    if (a.kind == "random") return random_tournament(a.size, a.seed);
    if (a.kind == "transitive") return transitive_tournament(a.size);
    return delete_vertices(paley_tournament(a.size),
                           VertexSet::from_members(a.deleted));
  }();
  write_text_file(a.out, to_trn(t));
  std::cout << a.out << ": n=" << t.order() << " " << regularity_name(t)
            << "\n";
  return kExitOk;
}

struct AnalyzeArgs {
  std::string in;
  bool bounds_only = false;
  bool json = false;
  int workers = 1;
  std::string out;
};

int run_analyze(const AnalyzeArgs& a) {
  const Tournament t = parse_trn(read_text_file(a.in));
  SimplicityReport rep;
  if (a.bounds_only) {
    rep = bounds_report(t);
  } else {
    SolverOptions options;
    options.workers = a.workers;
    rep = arrow_simplicity(t, options);
  }
  const std::optional<int> k = is_doubly_regular(t);
  const CheapWitnesses cheap = cheap_witnesses(t);

  Json result;
  result["simplicity"] = to_json(rep);
  result["doubly_regular_k"] = k ? Json(*k) : Json(nullptr);
  result["regularity"] = regularity_name(t);
  result["cheap_witnesses"] = {
      {"vertex", cheap.vertex},
      {"vertex_arcs", cheap.vertex_arcs.size()},
      {"pair", {cheap.pair_x, cheap.pair_y}},
      {"pair_arcs", cheap.pair_arcs.size()}};
  const Json report = make_report(
      a.bounds_only ? "analyze --bounds-only" : "analyze --exact",
      std::nullopt, Json{{"path", a.in}, {"order", t.order()}},
      Json::array({result}));
  if (!a.out.empty()) write_text_file(a.out, report.dump(2) + "\n");
  if (a.json) {
    std::cout << report.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "n = " << t.order() << "\n"
            << "s = " << (rep.exact ? "" : "<= ") << rep.s << "\n"
            << "min degree = " << rep.min_degree << "\n"
            << "min separators = " << rep.min_separators << "\n"
            << "theorem 1 bound = " << rep.theorem1_bound << "\n"
            << "simple = " << (rep.simple ? "yes" : "no") << "\n"
            << "doubly regular = "
            << (k ? "yes (k=" + std::to_string(*k) + ")" : "no") << "\n"
            << "witness module = " << join(rep.witness_module.members())
            << "\n"
            << "witness arcs (" << rep.witness_arcs.size()
            << ") = " << arcs_text(rep.witness_arcs) << "\n";
  if (rep.exact) {
    std::cout << "subsets examined = " << rep.subsets_examined
              << ", pruned = " << rep.subsets_pruned << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::optional<int> exhaustive;
  std::optional<std::uint64_t> samples;
  std::optional<int> n;
  std::uint64_t seed = 1;
  int q = 0;
  int workers = 1;
  bool json = false;
  std::string csv;
  std::string fixture_dir;
};

SuiteReport run_suite(const VerifyArgs& a) {
  if (a.suite == "identities") {
    if (a.exhaustive) return identity_exhaustive(*a.exhaustive);
    const int lo = a.n.value_or(3);
    const int hi = a.n.value_or(16);
    return identity_sample(a.samples.value_or(500), a.seed, lo, hi);
  }
  if (a.suite == "bounds" || a.suite == "theorem1") {
    SweepConfig config;
    config.workers = a.workers;
    config.seed = a.seed;
    if (a.exhaustive) {
      config.mode = SweepConfig::Mode::kExhaustive;
      config.n = *a.exhaustive;
    } else {
      config.mode = SweepConfig::Mode::kSample;
      config.n = a.n.value_or(7);
      config.count = a.samples.value_or(200);
    }
    SuiteReport r = sweep(config);
    r.suite = a.suite;
    return r;
  }
  if (a.suite == "theorem9") return theorem9_suite(a.q ? a.q : 11, a.workers);
  if (a.suite == "characterize") {
    return characterize_suite(a.q ? a.q : 7, a.workers);
  }
  return lakhlifi_suite(a.q ? a.q : 7);
}

int run_verify(const VerifyArgs& a) {
  const SuiteReport r = run_suite(a);
  std::optional<std::uint64_t> seed;
  if (!a.exhaustive && (a.suite == "identities" || a.suite == "bounds" ||
                        a.suite == "theorem1")) {
    seed = a.seed;
  }
  Json input;
  input["suite"] = a.suite;
  if (a.exhaustive) input["exhaustive"] = *a.exhaustive;
  if (a.samples) input["samples"] = *a.samples;
  if (a.n) input["n"] = *a.n;
  if (a.q) input["q"] = a.q;
  const Json report =
      make_report("verify " + a.suite, seed, input, Json::array({to_json(r)}));
  if (a.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const CheckResult& c : r.checks) {
      std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name << " ("
                << c.instances << " checked, " << c.failures << " failed)\n";
    }
    for (const auto& [key, count] : r.tallies) {
      std::cout << "  " << key << ": " << count << "\n";
    }
    std::cout << r.suite << ": " << r.instances << " instances, "
              << (r.passed() ? "all checks pass" : "FAILED") << "\n";
  }
  if (!a.csv.empty()) write_text_file(a.csv, to_csv(r));
  if (r.passed()) return kExitOk;

  const Witness* w = r.first_failure();
  std::cerr << "first failure: " << w->instance << ": " << w->detail << "\n";
  if (!a.fixture_dir.empty()) {
    std::filesystem::create_directories(a.fixture_dir);
    int index = 0;
    for (const CheckResult& c : r.checks) {
      if (!c.first_failure || !c.first_failure->tournament) continue;
      const auto path = std::filesystem::path(a.fixture_dir) /
                        (a.suite + "_" + c.name + "_" +
                         std::to_string(index++) + ".trn");
      write_text_file(path, to_trn(*c.first_failure->tournament));
      std::cerr << "fixture written: " << path.string() << "\n";
    }
  }
  return kExitFailed;
}

struct ConvertArgs {
  std::string direction;
  std::string in;
  std::string out;
};

int run_convert(const ConvertArgs& a) {
  const std::string text = read_text_file(a.in);
  if (a.direction == "dr-to-hadamard") {
    const SkewHadamard h = dr_to_skew_hadamard(parse_trn(text));
    write_text_file(a.out, to_matrix_text(h));
    std::cout << a.out << ": skew-Hadamard matrix of order " << h.order()
              << "\n";
  } else {
    const Tournament t = skew_hadamard_to_dr(parse_matrix_text(text));
    write_text_file(a.out, to_trn(t));
    std::cout << a.out << ": doubly regular tournament, n=" << t.order()
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arrow-simplicity of tournaments: exact solver, extremal "
               "constructions and verification suites"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a tournament as .trn");
  gen_cmd->add_option("kind", gen.kind, "paley | random | paley-minus | transitive")
      ->required()
      ->check(CLI::IsMember({"paley", "random", "paley-minus", "transitive"}));
  gen_cmd->add_option("size", gen.size, "q for paley kinds, n otherwise")
      ->required();
  gen_cmd->add_option("--seed", gen.seed, "seed for random");
  gen_cmd->add_option("--delete", gen.deleted,
                      "vertices removed for paley-minus")
      ->delimiter(',');
  gen_cmd->add_option("-o,--out", gen.out, "output .trn path")->required();

  AnalyzeArgs analyze;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Arrow-simplicity and bounds of a .trn");
  analyze_cmd->add_option("input", analyze.in, ".trn file")->required();
  auto* exact_flag =
      analyze_cmd->add_flag("--exact", "exact search (default)");
  analyze_cmd->add_flag("--bounds-only", analyze.bounds_only,
                        "upper bounds and cheap witnesses only")
      ->excludes(exact_flag);
  analyze_cmd->add_flag("--json", analyze.json, "print the JSON report");
  analyze_cmd->add_option("--out", analyze.out, "also write the JSON report");
  analyze_cmd->add_option("--workers", analyze.workers, "search threads")
      ->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd
      ->add_option("suite", verify.suite,
                   "identities | bounds | theorem1 | theorem9 | "
                   "characterize | lakhlifi")
      ->required()
      ->check(CLI::IsMember({"identities", "bounds", "theorem1", "theorem9",
                             "characterize", "lakhlifi"}));
  verify_cmd->add_option("--exhaustive", verify.exhaustive,
                         "all labeled tournaments of this order");
  verify_cmd->add_option("--samples", verify.samples,
                         "number of seeded random tournaments");
  verify_cmd->add_option("--n", verify.n, "order of sampled tournaments");
  verify_cmd->add_option("--seed", verify.seed, "base seed for sampling");
  verify_cmd->add_option("--q", verify.q, "Paley prime for theorem9, "
                         "characterize and lakhlifi");
  verify_cmd->add_option("--workers", verify.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify.json, "print the JSON report");
  verify_cmd->add_option("--csv", verify.csv, "write one CSV row per check");
  verify_cmd->add_option("--fixture-dir", verify.fixture_dir,
                         "write failing instances here as .trn");

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand(
      "convert", "Doubly regular tournament <-> skew-Hadamard matrix");
  convert_cmd->add_option("direction", convert.direction,
                          "dr-to-hadamard | hadamard-to-dr")
      ->required()
      ->check(CLI::IsMember({"dr-to-hadamard", "hadamard-to-dr"}));
  convert_cmd->add_option("input", convert.in)->required();
  convert_cmd->add_option("output", convert.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*analyze_cmd) return run_analyze(analyze);
    if (*verify_cmd) return run_verify(verify);
    return run_convert(convert);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
