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

// Modules, simplicity and the exact arrow-simplicity solver.
//
// The arrow-simplicity s(T) of a tournament on n >= 3 vertices is the fewest
// arcs whose reversal leaves a tournament that is NOT simple (0 when T is
// already decomposable). It equals the minimum, over candidate sets C with
// 2 <= |C| <= n-1, of the cost of turning C into a module, and that cost has
// the closed form
//
//   s_C(T) = sum over x outside C of min(|f(x) & C|, |v(x) & C|).
//
// arrow_simplicity() enumerates candidates by increasing size (lexicographic
// within a size), skipping whole size classes whose lower bound already
// meets the incumbent and abandoning partial sums once they reach it.

#ifndef ARROWSIMP_MODSIMP_HPP_
#define ARROWSIMP_MODSIMP_HPP_

#include <cstdint>
#include <vector>

#include "arrowsimp/cost_kernels.hpp"
#include "arrowsimp/tournament.hpp"

namespace arrowsimp {

// Default cap on n for exhaustive subset search (2^24 candidates).
inline constexpr int kExactCap = 24;

// True for |C| <= 1 and C = V as well. C must lie inside the vertex set
// (VertexOutOfRange otherwise).
bool is_module(const Tournament& t, VertexSet c);

// Smallest module containing {x, y}: grow from the pair by absorbing any
// outside vertex that separates two members until none is left.
VertexSet minimal_module_closure(const Tournament& t, int x, int y);

// Errors: TooSmall for n < 3.
bool is_simple(const Tournament& t);

enum class AttachSide {
  kInNeighbors,   // edges to f(x) & C; reversing them makes x -> C
  kOutNeighbors,  // edges to v(x) & C; reversing them makes C -> x
};

// A minimum-edge decomposability graph for `module`: one attachment per
// outside vertex, each joined to the smaller of f(x) & C and v(x) & C (the
// in-side on ties).
struct DecomposabilityGraph {
  struct Attachment {
    int vertex = 0;
    AttachSide side = AttachSide::kInNeighbors;
    VertexSet neighbors;
  };

  VertexSet module;
  std::vector<Attachment> attachments;

  int edge_count() const;
  // The arcs of the original tournament that the edges stand for.
  ArcSet reversal_arcs() const;
};

struct ModuleCost {
  int cost = 0;
  DecomposabilityGraph graph;
};

// Errors: BadSize unless 2 <= |C| <= n-1; VertexOutOfRange.
ModuleCost module_cost(const Tournament& t, VertexSet c);

// Best admissible lower bound on s_C(T) over all C of size c:
// min_degree when n - min_degree <= c, min_separators when
// c <= min_separators, the larger if both apply, 0 if neither.
// Errors: BadSize unless 2 <= c <= n-1.
int sC_lower_bound(const Tournament& t, int c, const DegreeProfile& profile);

// Upper bound on s by residue of n mod 4: 2k-2, 2k-1, 2k for n = 4k, 4k+1,
// 4k+2 and (n-1)/2 for n = 4k+3. Errors: TooSmall for n < 3.
int theorem1_bound(int n);

struct SimplicityReport {
  int order = 0;
  // Exact arrow-simplicity, or an upper bound when `exact` is false.
  int s = 0;
  bool exact = true;
  bool simple = false;
  VertexSet witness_module;
  ArcSet witness_arcs;
  int min_degree = 0;
  int min_separators = 0;
  int theorem1_bound = 0;
  std::uint64_t subsets_examined = 0;
  std::uint64_t subsets_pruned = 0;
};

struct SolverOptions {
  bool prune = true;
  int workers = 1;
  int max_order = kExactCap;
  kernels::Isa isa = kernels::default_isa();
};

// Errors: TooSmall (n < 3); TooLarge (n > options.max_order).
SimplicityReport arrow_simplicity(const Tournament& t,
                                  const SolverOptions& options = {});

// Polynomial-time report for instances beyond the exact cap: s is exact
// (zero) for non-simple input, otherwise min(min_degree, min_separators)
// with the matching cheap witness.
SimplicityReport bounds_report(const Tournament& t);

struct CheapWitnesses {
  // V minus `vertex` becomes a module after reversing `vertex_arcs`.
  int vertex = 0;
  ArcSet vertex_arcs;
  // {pair_x, pair_y} becomes a module after reversing `pair_arcs`.
  int pair_x = 0;
  int pair_y = 0;
  ArcSet pair_arcs;
};

// Errors: TooSmall for n < 3.
CheapWitnesses cheap_witnesses(const Tournament& t);

// Largest order accepted by direct_oracle.
inline constexpr int kOracleCap = 5;

// Minimum |B| such that reversing B leaves a non-simple tournament, by
// enumerating arc subsets in increasing size. Independent of the s_C
// reduction; exponential in n(n-1)/2.
// Errors: TooSmall (n < 3); TooLarge (n > kOracleCap).
int direct_oracle(const Tournament& t);

}  // namespace arrowsimp

#endif  // ARROWSIMP_MODSIMP_HPP_
