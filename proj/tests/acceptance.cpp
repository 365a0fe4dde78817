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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "arrowsimp/constructions.hpp"
#include "arrowsimp/io.hpp"
#include "arrowsimp/modsimp.hpp"
#include "arrowsimp/verify.hpp"

namespace {

using namespace arrowsimp;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const SuiteReport& r) {
    if (r.passed()) return;
    const Witness* w = r.first_failure();
    require(false, r.suite + ": " + w->instance + ": " + w->detail);
  }
};

Tournament without(const Tournament& t, std::initializer_list<int> vs) {
  return delete_vertices(t, VertexSet::from_members(vs));
}

// 1. Paley-7: s = 3 = (n-1)/2, and equality flags double regularity.
Outcome paley7_equality() {
  Outcome o;
  const Tournament p7 = paley_tournament(7);
  const SimplicityReport r = arrow_simplicity(p7);
  o.require(r.s == 3, "s=" + std::to_string(r.s));
  o.require(r.theorem1_bound == 3, "bound " + std::to_string(r.theorem1_bound));
  o.require(is_doubly_regular(p7) == 1, "not doubly regular with k=1");
  const SuiteReport b = bound_suite(p7, r, "paley q=7");
  o.require(b);
  o.require(b.tallies.count("doubly_regular") == 1,
            "equality branch did not flag double regularity");
  return o;
}

// 2. Exhaustive congruence-class bounds at n = 4, 5, 6.
Outcome exhaustive_bounds() {
  Outcome o;
  const std::vector<std::pair<int, int>> cases = {{4, 0}, {5, 1}, {6, 2}};
  for (const auto& [n, bound] : cases) {
    SweepConfig config;
    config.mode = SweepConfig::Mode::kExhaustive;
    config.n = n;
    const SuiteReport r = sweep(config);
    o.require(r);
    o.require(r.instances == labeled_tournament_count(n),
              "n=" + std::to_string(n) + ": " + std::to_string(r.instances) +
                  " instances");
    std::uint64_t within = 0;
    for (int s = 0; s <= bound; ++s) {
      const auto it = r.tallies.find("s=" + std::to_string(s));
      if (it != r.tallies.end()) within += it->second;
    }
    o.require(within == r.instances,
              "n=" + std::to_string(n) + ": some s exceeds " +
                  std::to_string(bound));
  }
  return o;
}

// 3. Solver equals the arc-subset oracle.
Outcome oracle_equivalence() {
  Outcome o;
  for (std::uint64_t code = 0; code < 64; ++code) {
    const Tournament t = tournament_from_code(4, code);
    const int a = arrow_simplicity(t).s;
    const int b = direct_oracle(t);
    o.require(a == b, "n=4 code=" + std::to_string(code) + ": solver " +
                          std::to_string(a) + ", oracle " + std::to_string(b));
  }
  for (std::uint64_t seed = 1; seed <= 256; ++seed) {
    const Tournament t = random_tournament(5, seed);
    const int a = arrow_simplicity(t).s;
    const int b = direct_oracle(t);
    o.require(a == b, "n=5 seed=" + std::to_string(seed) + ": solver " +
                          std::to_string(a) + ", oracle " + std::to_string(b));
  }
  return o;
}

// 4. Deleting two (three) vertices of Paley-11 gives s = 3 (s = 2).
Outcome paley11_deletions() {
  Outcome o;
  const SuiteReport r = theorem9_suite(11);
  o.require(r);
  o.require(r.find("two_deleted_s_is_2k_minus_1")->instances == 55,
            "expected 55 two-vertex deletions");
  o.require(r.find("three_deleted_s_is_2k_minus_2")->instances == 165,
            "expected 165 three-vertex deletions");
  return o;
}

// 5. Single deletions of Paley-7 / Paley-11 reach s = 2k and extend back.
Outcome characterization() {
  Outcome o;
  for (const auto& [q, want] : {std::pair{7, 2}, std::pair{11, 4}}) {
    const Tournament p = paley_tournament(q);
    for (int v = 0; v < q; ++v) {
      const std::string id =
          "q=" + std::to_string(q) + " minus " + std::to_string(v);
      const Tournament t = without(p, {v});
      const int s = arrow_simplicity(t).s;
      o.require(s == want, id + ": s=" + std::to_string(s));
      const Tournament ext = lakhlifi_extend(t, near_regular_partition(t));
      o.require(is_doubly_regular(ext) == (q - 3) / 4,
                id + ": extension is not doubly regular");
      o.require(characterize_4k2(t, {}, id).passed(),
                id + ": biconditional fails");
    }
  }
  return o;
}

// 6. Counting identities on 500 random tournaments, n in 3..16.
Outcome identities() {
  Outcome o;
  const SuiteReport r = identity_sample(500, 1, 3, 16);
  o.require(r);
  o.require(r.instances == 500, "instance count " + std::to_string(r.instances));
  return o;
}

// 7. Arc case table and separator pattern on every single deletion; pair
//    profile of Paley-q.
Outcome near_regular_structure() {
  Outcome o;
  for (int q : {7, 11}) {
    const Tournament p = paley_tournament(q);
    for (int v = 0; v < q; ++v) {
      const std::string id =
          "q=" + std::to_string(q) + " minus " + std::to_string(v);
      const Tournament t = without(p, {v});
      const NearRegularPartition part = near_regular_partition(t);
      o.require(check_C1_C2(t, part), id + ": separator pattern fails");
      o.require(lemma_lakhlifi_cases(t, part), id + ": case table fails");
    }
  }
  for (int q : {3, 7, 11, 19, 23}) {
    o.require(dr_pair_profile_check(paley_tournament(q)),
              "q=" + std::to_string(q) + ": pair profile fails");
  }
  return o;
}

// 8. Skew-Hadamard bridge invariants and byte-identical round trips.
Outcome hadamard_bridge() {
  Outcome o;
  for (int q : {3, 7, 11, 19, 23}) {
    const std::string id = "q=" + std::to_string(q);
    const Tournament p = paley_tournament(q);
    const SkewHadamard h = dr_to_skew_hadamard(p);
    o.require(h.order() == q + 1, id + ": wrong order");
    o.require(h.satisfies_invariants(), id + ": invariants fail");
    const std::string matrix_text = to_matrix_text(h);
    const SkewHadamard parsed = parse_matrix_text(matrix_text);
    o.require(to_matrix_text(parsed) == matrix_text,
              id + ": matrix text round trip differs");
    o.require(to_trn(skew_hadamard_to_dr(parsed)) == to_trn(p),
              id + ": tournament round trip differs");
  }
  return o;
}

// 9. Reversing the reported arcs makes the reported set a module.
Outcome witness_validity() {
  Outcome o;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const int n = 5 + static_cast<int>(i % 8);
    const std::uint64_t seed = 1000 + i;
    const std::string id =
        "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
    const Tournament t = random_tournament(n, seed);
    const SimplicityReport r = arrow_simplicity(t);
    const int size = r.witness_module.size();
    o.require(size >= 2 && size <= n - 1, id + ": trivial witness module");
    o.require(r.witness_arcs.size() == r.s, id + ": |witness| != s");
    o.require(is_module(reverse_arcs(t, r.witness_arcs), r.witness_module),
              id + ": witness module is not a module after reversal");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Paley-7 has s = 3 and is doubly regular", paley7_equality},
      {2, "exhaustive bounds at n = 4, 5, 6", exhaustive_bounds},
      {3, "solver matches the arc-subset oracle", oracle_equivalence},
      {4, "Paley-11 two/three-vertex deletions give s = 3 / 2",
       paley11_deletions},
      {5, "single deletions give s = 2k and extend to doubly regular",
       characterization},
      {6, "counting identities on 500 random tournaments", identities},
      {7, "separator pattern, case table and pair profile",
       near_regular_structure},
      {8, "skew-Hadamard bridge invariants and round trips", hadamard_bridge},
      {9, "witness validity on 100 random tournaments", witness_validity},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("%s criterion %d: %s (%.1fs)%s%s\n", o.ok ? "PASS" : "FAIL",
                c.id, c.name, secs, o.ok ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
