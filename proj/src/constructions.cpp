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

#include "arrowsimp/constructions.hpp"

#include <bit>
#include <random>
#include <string>

namespace arrowsimp {
namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

int pair_count(int n) { return n * (n - 1) / 2; }

void require_code_range(int n) {
  if (n < 1 || pair_count(n) > 63) {
    throw Error(ErrorCode::kTooLarge,
                "labeled enumeration supports 1 <= n <= 11, got " +
                    std::to_string(n));
  }
}

// Throws PartitionMismatch unless `p` is exactly the degree partition.
void validate_partition(const Tournament& t, const NearRegularPartition& p) {
  const int n = t.order();
  if (n % 4 != 2 || p.k != (n - 2) / 4) {
    throw Error(ErrorCode::kPartitionMismatch,
                "parameter k=" + std::to_string(p.k) +
                    " does not match order " + std::to_string(n));
  }
  if ((p.low.mask() | p.high.mask()) != t.vertices() ||
      (p.low.mask() & p.high.mask()) != 0) {
    throw Error(ErrorCode::kPartitionMismatch,
                "classes do not partition the vertex set");
  }
  for (int x = 0; x < n; ++x) {
    const int want = p.low.contains(x) ? 2 * p.k : 2 * p.k + 1;
    if (t.out_degree(x) != want) {
      throw Error(ErrorCode::kPartitionMismatch,
                  "vertex " + std::to_string(x) + " has out-degree " +
                      std::to_string(t.out_degree(x)) + ", class expects " +
                      std::to_string(want));
    }
  }
}

int separators(const Tournament& t, int x, int y) {
  return std::popcount((t.out_row(x) & t.in_row(y)) |
                       (t.in_row(x) & t.out_row(y)));
}

}  // namespace

Tournament paley_tournament(int q) {
  if (!is_prime(q)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(q) + " is not prime");
  }
  if (q % 4 != 3) {
    throw Error(ErrorCode::kWrongResidueClass,
                std::to_string(q) + " is not 3 mod 4");
  }
  if (q > kMaxVertices) {
    throw Error(ErrorCode::kTooLarge,
                "q=" + std::to_string(q) + " exceeds " +
                    std::to_string(kMaxVertices) + " vertices");
  }
  VertexMask residues = 0;
  for (int i = 1; i < q; ++i) residues |= bit(i * i % q);
  std::vector<VertexMask> rows(q, 0);
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      if ((residues >> ((y - x + q) % q)) & 1U) rows[x] |= bit(y);
    }
  }
  return Tournament::from_out_rows(rows);
}

Tournament transitive_tournament(int n) {
  std::vector<VertexMask> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = prefix_mask(n) & ~prefix_mask(i + 1);
  return Tournament::from_out_rows(rows);
}

Tournament random_tournament(int n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<VertexMask> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (engine() >> 63) {
        rows[i] |= bit(j);
      } else {
        rows[j] |= bit(i);
      }
    }
  }
  return Tournament::from_out_rows(rows);
}

Tournament tournament_from_code(int n, std::uint64_t code) {
  require_code_range(n);
  if (code >> pair_count(n)) {
    throw Error(ErrorCode::kTooLarge, "code has bits beyond the pair count");
  }
  std::vector<VertexMask> rows(n, 0);
  int p = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++p) {
      if ((code >> p) & 1U) {
        rows[i] |= bit(j);
      } else {
        rows[j] |= bit(i);
      }
    }
  }
  return Tournament::from_out_rows(rows);
}

std::uint64_t labeled_tournament_count(int n) {
  require_code_range(n);
  return std::uint64_t{1} << pair_count(n);
}

std::optional<int> is_doubly_regular(const Tournament& t) {
  const int n = t.order();
  if (n < 3) {
    throw Error(ErrorCode::kTooSmall,
                "double regularity needs n >= 3, got " + std::to_string(n));
  }
  const int k = std::popcount(t.out_row(0) & t.out_row(1));
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (std::popcount(t.out_row(x) & t.out_row(y)) != k) return std::nullopt;
    }
  }
  if (n != 4 * k + 3) {
    throw Error(ErrorCode::kInternal,
                "doubly regular tournament with n=" + std::to_string(n) +
                    " and k=" + std::to_string(k));
  }
  return k;
}

bool dr_pair_profile_check(const Tournament& t) {
  const std::optional<int> k = t.order() >= 3 ? is_doubly_regular(t)
                                              : std::nullopt;
  if (!k) {
    throw Error(ErrorCode::kNotDoublyRegular,
                "pair profile needs a doubly regular tournament");
  }
  const int n = t.order();
  for (int x = 0; x < n; ++x) {
    if (t.out_degree(x) != (n - 1) / 2) return false;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !t.dominates(x, y)) continue;
      const PairStats s = pair_stats(t, x, y);
      if (s.out_pair != *k || s.in_pair != *k || s.out_in != *k ||
          s.in_out != *k + 1) {
        return false;
      }
    }
  }
  return true;
}

NearRegularPartition near_regular_partition(const Tournament& t) {
  const int n = t.order();
  if (n % 4 != 2) {
    throw Error(ErrorCode::kWrongOrder,
                "order " + std::to_string(n) + " is not 2 mod 4");
  }
  const Regularity r = regularity_class(t);
  if (r.kind != Regularity::Kind::kNearRegular) {
    throw Error(ErrorCode::kNotNearRegular,
                "out-degrees are not the two middle values in equal numbers");
  }
  return {r.lower, r.higher, (n - 2) / 4};
}

bool check_C1_C2(const Tournament& t, const NearRegularPartition& p) {
  validate_partition(t, p);
  const int n = t.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const bool same = p.low.contains(x) == p.low.contains(y);
      const int want = same ? 2 * p.k + 1 : 2 * p.k;
      if (separators(t, x, y) != want) return false;
    }
  }
  return true;
}

Tournament lakhlifi_extend(const Tournament& t, const NearRegularPartition& p) {
  if (!check_C1_C2(t, p)) {
    throw Error(ErrorCode::kConditionsViolated,
                "separator pattern fails; refusing to extend");
  }
  const int n = t.order();
  if (n + 1 > kMaxVertices) {
    throw Error(ErrorCode::kTooLarge, "extension exceeds the vertex limit");
  }
  std::vector<VertexMask> rows(t.out_rows().begin(), t.out_rows().end());
  for (int v : p.low.members()) rows[v] |= bit(n);
  rows.push_back(p.high.mask());
  const Tournament ext = Tournament::from_out_rows(rows);

  if (is_doubly_regular(ext) != p.k) {
    throw Error(ErrorCode::kInternal, "extension is not doubly regular");
  }
  for (int z = 0; z < n; ++z) {
    if (separators(ext, n, z) != 2 * p.k + 1) {
      throw Error(ErrorCode::kInternal,
                  "new vertex has the wrong separator count with vertex " +
                      std::to_string(z));
    }
  }
  return ext;
}

bool lemma_lakhlifi_cases(const Tournament& t, const NearRegularPartition& p) {
  if (!check_C1_C2(t, p)) {
    throw Error(ErrorCode::kConditionsViolated,
                "separator pattern fails; the case table does not apply");
  }
  const int n = t.order();
  const int k = p.k;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !t.dominates(x, y)) continue;
      const PairStats s = pair_stats(t, x, y);
      const bool x_high = p.high.contains(x);
      const bool y_high = p.high.contains(y);
      int want_in_out = k + 1;
      int want_out_in = k;
      if (x_high && !y_high) {
        want_in_out = k;
      } else if (!x_high && y_high) {
        want_out_in = k - 1;
      }
      if (s.in_out != want_in_out || s.out_in != want_out_in) return false;
    }
  }
  return true;
}

SkewHadamard SkewHadamard::from_rows(const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) {
    throw Error(ErrorCode::kInvariantViolation, "empty matrix");
  }
  SkewHadamard h;
  h.m_ = m;
  h.entries_.reserve(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != m) {
      throw Error(ErrorCode::kInvariantViolation,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(m));
    }
    for (int v : rows[i]) {
      if (v != 1 && v != -1) {
        throw Error(ErrorCode::kInvariantViolation,
                    "entry " + std::to_string(v) + " in row " +
                        std::to_string(i) + " is not +1/-1");
      }
      h.entries_.push_back(static_cast<std::int8_t>(v));
    }
  }
  return h;
}

bool SkewHadamard::satisfies_invariants() const {
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      if (at(i, j) + at(j, i) != (i == j ? 2 : 0)) return false;
    }
  }
  for (int i = 0; i < m_; ++i) {
    for (int j = i; j < m_; ++j) {
      int dot = 0;
      for (int l = 0; l < m_; ++l) dot += at(i, l) * at(j, l);
      if (dot != (i == j ? m_ : 0)) return false;
    }
  }
  return true;
}

bool SkewHadamard::is_normalized() const {
  for (int j = 0; j < m_; ++j) {
    if (at(0, j) != 1) return false;
  }
  for (int i = 1; i < m_; ++i) {
    if (at(i, 0) != -1) return false;
  }
  return true;
}

SkewHadamard dr_to_skew_hadamard(const Tournament& t) {
  if (t.order() < 3 || !is_doubly_regular(t)) {
    throw Error(ErrorCode::kNotDoublyRegular,
                "the bridge needs a doubly regular tournament");
  }
  const int n = t.order();
  std::vector<std::vector<int>> rows(n + 1, std::vector<int>(n + 1, 1));
  for (int i = 1; i <= n; ++i) rows[i][0] = -1;
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (v != w && !t.dominates(v, w)) rows[v + 1][w + 1] = -1;
    }
  }
  SkewHadamard h = SkewHadamard::from_rows(rows);
  if (!h.satisfies_invariants()) {
    throw Error(ErrorCode::kInternal,
                "bridge produced a matrix that is not skew-Hadamard");
  }
  return h;
}

Tournament skew_hadamard_to_dr(const SkewHadamard& h) {
  if (!h.satisfies_invariants()) {
    throw Error(ErrorCode::kInvariantViolation,
                "matrix fails H + H^T = 2I or H H^T = mI");
  }
  if (!h.is_normalized()) {
    throw Error(ErrorCode::kNotNormalized,
                "row 0 must be +1 and column 0 must be -1 off the diagonal");
  }
  const int n = h.order() - 1;
  if (n < 3 || n > kMaxVertices) {
    throw Error(ErrorCode::kInvariantViolation,
                "order " + std::to_string(h.order()) +
                    " does not correspond to a supported tournament");
  }
  std::vector<VertexMask> rows(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (v != w && h.at(v + 1, w + 1) == 1) rows[v] |= bit(w);
    }
  }
  Tournament t = Tournament::from_out_rows(rows);
  if (is_doubly_regular(t) != (n - 3) / 4) {
    throw Error(ErrorCode::kInternal,
                "normalized skew-Hadamard core is not doubly regular");
  }
  return t;
}

}  // namespace arrowsimp
