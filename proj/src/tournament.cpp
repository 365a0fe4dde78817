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

#include "arrowsimp/tournament.hpp"

#include <algorithm>
#include <string>

namespace arrowsimp {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kDiagonalSet: return "DiagonalSet";
    case ErrorCode::kNotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kArcAbsent: return "ArcAbsent";
    case ErrorCode::kDuplicate: return "Duplicate";
    case ErrorCode::kDeletesEverything: return "DeletesEverything";
    case ErrorCode::kBadSize: return "BadSize";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kWrongResidueClass: return "WrongResidueClass";
    case ErrorCode::kNotDoublyRegular: return "NotDoublyRegular";
    case ErrorCode::kNotNearRegular: return "NotNearRegular";
    case ErrorCode::kWrongOrder: return "WrongOrder";
    case ErrorCode::kPartitionMismatch: return "PartitionMismatch";
    case ErrorCode::kConditionsViolated: return "ConditionsViolated";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kWrongShape: return "WrongShape";
    case ErrorCode::kTooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

VertexSet VertexSet::from_members(std::span<const int> members) {
  VertexMask mask = 0;
  for (int v : members) {
    if (v < 0 || v >= kMaxVertices) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " is not a valid label");
    }
    if (mask & bit(v)) {
      throw Error(ErrorCode::kDuplicate,
                  "vertex " + std::to_string(v) + " listed twice");
    }
    mask |= bit(v);
  }
  return VertexSet(mask);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (VertexMask m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  const std::vector<int> lhs = a.members();
  const std::vector<int> rhs = b.members();
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(),
                                      rhs.end());
}

ArcSet ArcSet::from_arcs(std::vector<Arc> arcs) {
  for (const Arc& a : arcs) {
    if (a.from == a.to) {
      throw Error(ErrorCode::kSameVertex,
                  "loop at vertex " + std::to_string(a.from));
    }
    if (a.from < 0 || a.to < 0 || a.from >= kMaxVertices ||
        a.to >= kMaxVertices) {
      throw Error(ErrorCode::kVertexOutOfRange, "arc endpoint out of range");
    }
  }
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 1; i < arcs.size(); ++i) {
    if (arcs[i] == arcs[i - 1]) {
      throw Error(ErrorCode::kDuplicate,
                  "arc (" + std::to_string(arcs[i].from) + "," +
                      std::to_string(arcs[i].to) + ") listed twice");
    }
  }
  for (const Arc& a : arcs) {
    if (std::binary_search(arcs.begin(), arcs.end(), Arc{a.to, a.from})) {
      throw Error(ErrorCode::kDuplicate,
                  "pair {" + std::to_string(a.from) + "," +
                      std::to_string(a.to) + "} present in both orientations");
    }
  }
  ArcSet out;
  out.arcs_ = std::move(arcs);
  return out;
}

ArcSet ArcSet::flipped() const {
  std::vector<Arc> rev;
  rev.reserve(arcs_.size());
  for (const Arc& a : arcs_) rev.push_back({a.to, a.from});
  std::sort(rev.begin(), rev.end());
  ArcSet out;
  out.arcs_ = std::move(rev);
  return out;
}

Tournament Tournament::from_out_rows(std::span<const VertexMask> out_rows) {
  const int n = static_cast<int>(out_rows.size());
  if (n == 0 || n > kMaxVertices) {
    throw Error(ErrorCode::kNotSquare,
                "tournament order must be in 1.." +
                    std::to_string(kMaxVertices) + ", got " +
                    std::to_string(n));
  }
  const VertexMask all = prefix_mask(n);
  for (int i = 0; i < n; ++i) {
    if (out_rows[i] & ~all) {
      throw Error(ErrorCode::kNotSquare,
                  "row " + std::to_string(i) + " has bits beyond column " +
                      std::to_string(n - 1));
    }
    if (out_rows[i] & bit(i)) {
      throw Error(ErrorCode::kDiagonalSet,
                  "entry (" + std::to_string(i) + "," + std::to_string(i) +
                      ") is set");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool ij = (out_rows[i] >> j) & 1U;
      const bool ji = (out_rows[j] >> i) & 1U;
      if (ij == ji) {
        throw Error(ErrorCode::kNotAntisymmetric,
                    "pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") has " + (ij ? "both" : "neither") +
                        " orientation");
      }
    }
  }
  Tournament t;
  t.n_ = n;
  t.out_.assign(out_rows.begin(), out_rows.end());
  t.in_.resize(n);
  for (int i = 0; i < n; ++i) t.in_[i] = all & ~t.out_[i] & ~bit(i);
  return t;
}

Tournament from_matrix(const std::vector<std::vector<bool>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0 || n > static_cast<std::size_t>(kMaxVertices)) {
    throw Error(ErrorCode::kNotSquare,
                "matrix must have 1.." + std::to_string(kMaxVertices) +
                    " rows");
  }
  std::vector<VertexMask> packed(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::kNotSquare,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j]) packed[i] |= bit(static_cast<int>(j));
    }
  }
  return Tournament::from_out_rows(packed);
}

namespace {

void check_vertex(const Tournament& t, int x) {
  if (x < 0 || x >= t.order()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(x) + " not in 0.." +
                    std::to_string(t.order() - 1));
  }
}

}  // namespace

Neighborhoods neighborhoods(const Tournament& t, int x) {
  check_vertex(t, x);
  return {VertexSet(t.out_row(x)), VertexSet(t.in_row(x))};
}

PairStats pair_stats(const Tournament& t, int x, int y) {
  check_vertex(t, x);
  check_vertex(t, y);
  if (x == y) {
    throw Error(ErrorCode::kSameVertex,
                "pair statistics need two distinct vertices");
  }
  // x and y never appear in the intersections: x is in neither v(x) nor
  // f(x), and y is in exactly one of v(x), f(x) but in neither set of y.
  PairStats s;
  s.out_pair = std::popcount(t.out_row(x) & t.out_row(y));
  s.in_pair = std::popcount(t.in_row(x) & t.in_row(y));
  s.out_in = std::popcount(t.out_row(x) & t.in_row(y));
  s.in_out = std::popcount(t.in_row(x) & t.out_row(y));
  s.separators = s.out_in + s.in_out;
  return s;
}

DegreeProfile global_minima(const Tournament& t) {
  const int n = t.order();
  if (n < 3) {
    throw Error(ErrorCode::kTooSmall,
                "degree minima need at least 3 vertices, got " +
                    std::to_string(n));
  }
  DegreeProfile p;
  p.out_degree.resize(n);
  p.in_degree.resize(n);
  p.min_out = n;
  p.min_in = n;
  for (int x = 0; x < n; ++x) {
    p.out_degree[x] = t.out_degree(x);
    p.in_degree[x] = t.in_degree(x);
    p.min_out = std::min(p.min_out, p.out_degree[x]);
    p.min_in = std::min(p.min_in, p.in_degree[x]);
  }
  p.min_degree = std::min(p.min_out, p.min_in);
  p.min_separators = n;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const int sep = std::popcount((t.out_row(x) & t.in_row(y)) |
                                    (t.in_row(x) & t.out_row(y)));
      p.min_separators = std::min(p.min_separators, sep);
    }
  }
  return p;
}

Tournament reverse_arcs(const Tournament& t, const ArcSet& arcs) {
  std::vector<VertexMask> rows(t.out_rows().begin(), t.out_rows().end());
  for (const Arc& a : arcs) {
    check_vertex(t, a.from);
    check_vertex(t, a.to);
    if (!t.dominates(a.from, a.to)) {
      throw Error(ErrorCode::kArcAbsent,
                  "arc (" + std::to_string(a.from) + "," +
                      std::to_string(a.to) + ") is not in the tournament");
    }
    rows[a.from] &= ~bit(a.to);
    rows[a.to] |= bit(a.from);
  }
  return Tournament::from_out_rows(rows);
}

Tournament delete_vertices(const Tournament& t, VertexSet removed) {
  const int n = t.order();
  if (removed.mask() & ~t.vertices()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "deleted set mentions a vertex outside 0.." +
                    std::to_string(n - 1));
  }
  if (removed.size() >= n) {
    throw Error(ErrorCode::kDeletesEverything,
                "cannot delete all " + std::to_string(n) + " vertices");
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v) {
    if (!removed.contains(v)) keep.push_back(v);
  }
  const int m = static_cast<int>(keep.size());
  std::vector<VertexMask> rows(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (t.dominates(keep[i], keep[j])) rows[i] |= bit(j);
    }
  }
  return Tournament::from_out_rows(rows);
}

Regularity regularity_class(const Tournament& t) {
  const int n = t.order();
  if (n < 2) {
    throw Error(ErrorCode::kTooSmall,
                "regularity needs at least 2 vertices, got " +
                    std::to_string(n));
  }
  Regularity r;
  if (n % 2 == 1) {
    for (int x = 0; x < n; ++x) {
      if (t.out_degree(x) != (n - 1) / 2) return r;
    }
    r.kind = Regularity::Kind::kRegular;
    return r;
  }
  VertexMask lower = 0;
  VertexMask higher = 0;
  for (int x = 0; x < n; ++x) {
    const int d = t.out_degree(x);
    if (d == n / 2) {
      higher |= bit(x);
    } else if (d == (n - 2) / 2) {
      lower |= bit(x);
    } else {
      return r;
    }
  }
  // The degree sum forces equal class sizes once every degree is one of the
  // two middle values.
  r.kind = Regularity::Kind::kNearRegular;
  r.lower = VertexSet(lower);
  r.higher = VertexSet(higher);
  return r;
}

}  // namespace arrowsimp
