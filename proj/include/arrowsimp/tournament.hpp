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

// Tournament data model and the degree / separator statistics used by every
// other part of the library. Rows are bit-packed: bit y of out_row(x) is set
// iff x -> y, so every neighborhood intersection is an AND plus a popcount.

#ifndef ARROWSIMP_TOURNAMENT_HPP_
#define ARROWSIMP_TOURNAMENT_HPP_

#include <bit>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "arrowsimp/error.hpp"

namespace arrowsimp {

using VertexMask = std::uint64_t;

// One machine word per row.
inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask prefix_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

// A subset of {0..63}; members are always reported in ascending order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit constexpr VertexSet(VertexMask mask) : mask_(mask) {}

  // Rejects negative or >= kMaxVertices labels (VertexOutOfRange) and
  // repeated labels (Duplicate).
  static VertexSet from_members(std::span<const int> members);
  static VertexSet from_members(std::initializer_list<int> members) {
    return from_members(std::span<const int>(members.begin(), members.size()));
  }

  constexpr VertexMask mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int v) const {
    return v >= 0 && v < kMaxVertices && (mask_ >> v) & 1U;
  }
  std::vector<int> members() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  VertexMask mask_ = 0;
};

// Lexicographic order on ascending member lists ({0,3} < {1,2}).
bool lex_less(VertexSet a, VertexSet b);

struct Arc {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Ordered pairs kept sorted; never contains a pair in both orientations.
class ArcSet {
 public:
  ArcSet() = default;
  // Throws Duplicate on a repeated pair or both orientations of one pair,
  // SameVertex on a loop.
  static ArcSet from_arcs(std::vector<Arc> arcs);

  const std::vector<Arc>& arcs() const { return arcs_; }
  int size() const { return static_cast<int>(arcs_.size()); }
  bool empty() const { return arcs_.empty(); }
  auto begin() const { return arcs_.begin(); }
  auto end() const { return arcs_.end(); }

  // Every pair flipped: the arc set that undoes a reversal.
  ArcSet flipped() const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  std::vector<Arc> arcs_;
};

class Tournament {
 public:
  // Validating constructor over bit-packed out-neighborhood rows.
  static Tournament from_out_rows(std::span<const VertexMask> out_rows);

  int order() const { return n_; }
  VertexMask vertices() const { return prefix_mask(n_); }

  bool dominates(int x, int y) const { return (out_[x] >> y) & 1U; }
  VertexMask out_row(int x) const { return out_[x]; }
  VertexMask in_row(int x) const { return in_[x]; }
  std::span<const VertexMask> out_rows() const { return out_; }
  std::span<const VertexMask> in_rows() const { return in_; }

  int out_degree(int x) const { return std::popcount(out_[x]); }
  int in_degree(int x) const { return std::popcount(in_[x]); }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  Tournament() = default;

  int n_ = 0;
  std::vector<VertexMask> out_;
  std::vector<VertexMask> in_;
};

// Errors: NotSquare (also for n == 0 or n > kMaxVertices), DiagonalSet,
// NotAntisymmetric naming the first offending pair in row-major order.
Tournament from_matrix(const std::vector<std::vector<bool>>& rows);

struct Neighborhoods {
  VertexSet out_set;
  VertexSet in_set;
};

Neighborhoods neighborhoods(const Tournament& t, int x);

// Counts for an ordered pair (x, y). With v = out-neighborhood and
// f = in-neighborhood:
//   out_pair = |v(x) & v(y)|, in_pair = |f(x) & f(y)|,
//   out_in   = |v(x) & f(y)|, in_out  = |f(x) & v(y)|,
//   separators = out_in + in_out.
struct PairStats {
  int out_pair = 0;
  int in_pair = 0;
  int out_in = 0;
  int in_out = 0;
  int separators = 0;

  friend bool operator==(const PairStats&, const PairStats&) = default;
};

PairStats pair_stats(const Tournament& t, int x, int y);

struct DegreeProfile {
  std::vector<int> out_degree;
  std::vector<int> in_degree;
  int min_out = 0;
  int min_in = 0;
  int min_degree = 0;     // min(min_out, min_in)
  int min_separators = 0; // minimum separator count over all pairs
};

// Errors: TooSmall for n < 3.
DegreeProfile global_minima(const Tournament& t);

// Every arc of `arcs` must be present in `t` as given (ArcAbsent otherwise).
Tournament reverse_arcs(const Tournament& t, const ArcSet& arcs);

// Survivors are relabeled 0..n-|removed|-1 keeping their relative order.
Tournament delete_vertices(const Tournament& t, VertexSet removed);

struct Regularity {
  enum class Kind { kRegular, kNearRegular, kNeither };
  Kind kind = Kind::kNeither;
  // Populated for kNearRegular only: lower and higher out-degree classes.
  VertexSet lower;
  VertexSet higher;
};

// Errors: TooSmall for n < 2.
Regularity regularity_class(const Tournament& t);

}  // namespace arrowsimp

#endif  // ARROWSIMP_TOURNAMENT_HPP_
