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

// Machine-checkable suites for the counting identities, the upper bounds
// and the tightness results, plus exhaustive and sampled sweeps. Every
// check is an exact integer comparison.

#ifndef ARROWSIMP_VERIFY_HPP_
#define ARROWSIMP_VERIFY_HPP_

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrowsimp/modsimp.hpp"
#include "arrowsimp/tournament.hpp"

namespace arrowsimp {

// Enough to replay a failure: an instance id (seed, enumeration code or
// fixture name), what went wrong, and the instance itself.
struct Witness {
  std::string instance;
  std::string detail;
  std::optional<Tournament> tournament;
};

struct CheckResult {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::optional<Witness> first_failure;

  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t instances = 0;
  std::vector<CheckResult> checks;
  // Free-form counters such as "s=2" -> number of instances with s = 2.
  std::map<std::string, std::uint64_t> tallies;

  bool passed() const;
  const CheckResult* find(std::string_view check) const;
  const Witness* first_failure() const;

  // Adds one observation of `check`. `make_witness` runs only on failure,
  // and its result is kept only for the first failure of that check.
  template <typename MakeWitness>
    requires std::invocable<MakeWitness&>
  void record(std::string_view check, bool ok, MakeWitness&& make_witness) {
    CheckResult& c = slot(check);
    ++c.instances;
    if (!ok && c.failures++ == 0) c.first_failure = make_witness();
  }
  void record(std::string_view check, bool ok, const Witness& witness) {
    record(check, ok, [&] { return witness; });
  }
  void tally(const std::string& key, std::uint64_t count = 1);

  // Per-check counts add; earlier failures win. Associative, so merging
  // chunk reports in index order is independent of how work was split.
  void merge(const SuiteReport& other);

 private:
  CheckResult& slot(std::string_view check);
};

// Degree sum, separator / in-pair / out-pair double counts, the difference
// identity for in- and out-pair degrees, and the four-way pair partition.
// Errors: TooSmall for n < 3.
SuiteReport identity_suite(const Tournament& t,
                           const std::string& instance = "input");

// Upper bounds on the degree and separator minima, s <= both minima,
// s <= theorem1_bound(n), the doubly-regular equality case, and witness
// validity. `report` must be exact (WrongShape otherwise).
SuiteReport bound_suite(const Tournament& t, const SimplicityReport& report,
                        const std::string& instance = "input");

// For near-regular tournaments on 4k vertices the separator counts sum to
// 8k^2(2k-1). Errors: WrongShape.
SuiteReport near_regular_4k_sum(const Tournament& t,
                                const std::string& instance = "input");

// On 4k+2 vertices: s = 2k exactly when the tournament is near-regular,
// meets the separator pattern, and extends to a doubly regular tournament.
// Errors: WrongShape (n mod 4 != 2); TooLarge beyond the exact cap.
SuiteReport characterize_4k2(const Tournament& t,
                             const SolverOptions& options = {},
                             const std::string& instance = "input");

struct SweepConfig {
  enum class Mode { kExhaustive, kSample };
  Mode mode = Mode::kSample;
  int n = 0;
  // Ignored in exhaustive mode.
  std::uint64_t count = 0;
  // Sampled instance i is random_tournament(n, seed + i).
  std::uint64_t seed = 0;
  int workers = 1;
};

// Largest n for exhaustive sweeps (2^15 labeled tournaments).
inline constexpr int kExhaustiveCap = 6;

// identity_suite + bound_suite (+ oracle equivalence for n <= kOracleCap)
// over the configured population, tallying s.
// Errors: TooLargeForExhaustive; TooSmall for n < 3.
SuiteReport sweep(const SweepConfig& config);

// identity_suite over `count` random tournaments; instance i has order
// min_n + i mod (max_n - min_n + 1) and seed `seed + i`.
// Errors: TooSmall unless 3 <= min_n <= max_n.
SuiteReport identity_sample(std::uint64_t count, std::uint64_t seed,
                            int min_n, int max_n);

// identity_suite over every labeled n-tournament (n <= kExhaustiveCap).
SuiteReport identity_exhaustive(int n);

// Every 2- and 3-vertex deletion of Paley-q (q >= 11) has s = 2k-1 and 2k-2
// respectively. Errors: WrongShape for q < 11; Paley errors.
SuiteReport theorem9_suite(int q, int workers = 1);

// Every single-vertex deletion of Paley-q is near-regular, meets the
// separator pattern and the arc case table, and extends back to a doubly
// regular tournament equal to Paley-q with the deleted vertex relabeled
// last; Paley-q itself has the doubly regular pair profile.
SuiteReport lakhlifi_suite(int q);

// characterize_4k2 plus s = 2k on every single-vertex deletion of Paley-q.
SuiteReport characterize_suite(int q, int workers = 1);

}  // namespace arrowsimp

#endif  // ARROWSIMP_VERIFY_HPP_
