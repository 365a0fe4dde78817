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

// Generators and recognizers for the extremal tournaments: quadratic-residue
// (Paley) doubly regular tournaments, near-regular tournaments of order
// 4k+2 with their degree classes, the one-vertex extension that turns a
// suitable near-regular tournament back into a doubly regular one, and the
// correspondence with skew-Hadamard matrices.

#ifndef ARROWSIMP_CONSTRUCTIONS_HPP_
#define ARROWSIMP_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arrowsimp/tournament.hpp"

namespace arrowsimp {

// x -> y iff (y - x) mod q is a nonzero square mod q.
// Errors: NotPrime; WrongResidueClass (q mod 4 != 3); TooLarge (q > 64).
Tournament paley_tournament(int q);

// i -> j iff i < j.
Tournament transitive_tournament(int n);

// Pairs (i, j), i < j, are visited in row-major order; each takes one draw
// from std::mt19937_64 seeded with `seed`, and i -> j iff the draw's top
// bit is set. The engine's output sequence is fixed by the C++ standard, so
// results are identical on every conforming platform.
Tournament random_tournament(int n, std::uint64_t seed);

// Bit p of `code` orients the p-th pair (i, j), i < j, in row-major order:
// set means i -> j. Enumerating code over [0, 2^(n(n-1)/2)) visits every
// labeled n-tournament once. Errors: TooLarge when n(n-1)/2 > 63.
Tournament tournament_from_code(int n, std::uint64_t code);

// 2^(n(n-1)/2); same limits as tournament_from_code.
std::uint64_t labeled_tournament_count(int n);

// k when every pair of vertices jointly dominates exactly k vertices.
// Errors: TooSmall for n < 3.
std::optional<int> is_doubly_regular(const Tournament& t);

// For every arc x -> y: |v(x)&v(y)| = |f(x)&f(y)| = |v(x)&f(y)| = k and
// |f(x)&v(y)| = k+1, plus regularity. Errors: NotDoublyRegular.
bool dr_pair_profile_check(const Tournament& t);

// Degree classes of a near-regular tournament on 4k+2 vertices.
struct NearRegularPartition {
  VertexSet low;   // out-degree 2k
  VertexSet high;  // out-degree 2k+1
  int k = 0;

  friend bool operator==(const NearRegularPartition&,
                         const NearRegularPartition&) = default;
};

// Errors: WrongOrder (n mod 4 != 2); NotNearRegular.
NearRegularPartition near_regular_partition(const Tournament& t);

// Separator pattern: 2k+1 separators for every pair inside one class, 2k for
// every pair across classes. Errors: PartitionMismatch when `p` is not the
// degree partition of `t`.
bool check_C1_C2(const Tournament& t, const NearRegularPartition& p);

// Adds a vertex (label n) dominating `high` and dominated by `low`; the
// result is verified doubly regular with parameter k before it is returned.
// Errors: PartitionMismatch; ConditionsViolated when the separator pattern
// fails.
Tournament lakhlifi_extend(const Tournament& t, const NearRegularPartition& p);

// For every arc x -> y checks (|f(x)&v(y)|, |v(x)&f(y)|) against the class
// pair: (high, high) and (low, low) give (k+1, k); (high, low) gives (k, k);
// (low, high) gives (k+1, k-1).
// Errors: PartitionMismatch; ConditionsViolated.
bool lemma_lakhlifi_cases(const Tournament& t, const NearRegularPartition& p);

// Square +1/-1 matrix; invariants are checked on demand.
class SkewHadamard {
 public:
  // Errors: InvariantViolation for a non-square shape or an entry other
  // than +1/-1.
  static SkewHadamard from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return m_; }
  int at(int i, int j) const { return entries_[i * m_ + j]; }

  // H + H^T = 2I and H H^T = mI, in exact integer arithmetic.
  bool satisfies_invariants() const;
  // Row 0 is all +1 and column 0 is -1 below the diagonal.
  bool is_normalized() const;

  friend bool operator==(const SkewHadamard&, const SkewHadamard&) = default;

 private:
  int m_ = 0;
  std::vector<std::int8_t> entries_;
};

// Index 0 is the border: H[0][j] = +1, H[i][0] = -1 for i > 0. Vertex v of
// the tournament sits at index v+1 with H = +1 on the diagonal and for
// v -> w, -1 for w -> v. Errors: NotDoublyRegular (also for n < 3).
SkewHadamard dr_to_skew_hadamard(const Tournament& t);

// Inverse of dr_to_skew_hadamard. Errors: InvariantViolation;
// NotNormalized.
Tournament skew_hadamard_to_dr(const SkewHadamard& h);

}  // namespace arrowsimp

#endif  // ARROWSIMP_CONSTRUCTIONS_HPP_
