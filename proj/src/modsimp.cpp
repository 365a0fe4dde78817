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

#include "arrowsimp/modsimp.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <climits>
#include <string>
#include <thread>

namespace arrowsimp {
namespace {

void check_subset(const Tournament& t, VertexSet c) {
  if (c.mask() & ~t.vertices()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "set mentions a vertex outside 0.." +
                    std::to_string(t.order() - 1));
  }
}

void require_order_at_least_3(const Tournament& t, const char* what) {
  if (t.order() < 3) {
    throw Error(ErrorCode::kTooSmall, std::string(what) +
                                          " needs at least 3 vertices, got " +
                                          std::to_string(t.order()));
  }
}

VertexMask closure_mask(const Tournament& t, VertexMask m) {
  const VertexMask all = t.vertices();
  for (;;) {
    VertexMask grown = m;
    for (VertexMask rest = all & ~m; rest != 0; rest &= rest - 1) {
      const int z = std::countr_zero(rest);
      if ((t.out_row(z) & m) != 0 && (t.in_row(z) & m) != 0) grown |= bit(z);
    }
    if (grown == m) return m;
    m = grown;
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// Smallest, then lexicographically first, nontrivial module; zero mask if
// the tournament is simple.
VertexMask smallest_nontrivial_module(const Tournament& t) {
  const int n = t.order();
  VertexMask best = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const VertexMask m = closure_mask(t, bit(x) | bit(y));
      if (m == t.vertices()) continue;
      if (best == 0 || std::popcount(m) < std::popcount(best) ||
          (std::popcount(m) == std::popcount(best) &&
           lex_less(VertexSet(m), VertexSet(best)))) {
        best = m;
      }
    }
  }
  return best;
}

struct ClassBest {
  int cost = INT_MAX;
  VertexMask mask = 0;
};

void atomic_min(std::atomic<int>& target, int value) {
  int cur = target.load(std::memory_order_relaxed);
  while (value < cur &&
         !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// Scans every candidate of size c whose smallest member is `lead`, in
// lexicographic order, and returns the first one of minimum cost among
// those cheaper than the cutoff in force.
ClassBest scan_lead(const Tournament& t, int c, int lead, int prev_best,
                    bool prune, std::atomic<int>& class_best,
                    kernels::CostBatchFn kernel) {
  constexpr std::size_t kBatch = 256;
  const int n = t.order();
  const int r = c - 1;
  std::array<int, kMaxVertices> idx{};
  for (int i = 0; i < r; ++i) idx[i] = lead + 1 + i;

  std::array<VertexMask, kBatch> batch{};
  std::array<int, kBatch> costs{};
  ClassBest best;
  bool more = true;
  while (more) {
    std::size_t filled = 0;
    while (more && filled < kBatch) {
      VertexMask m = bit(lead);
      for (int i = 0; i < r; ++i) m |= bit(idx[i]);
      batch[filled++] = m;
      // Next combination of r indices from lead+1..n-1.
      int i = r - 1;
      while (i >= 0 && idx[i] == n - r + i) --i;
      if (i < 0) {
        more = false;
      } else {
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    const int shared = class_best.load(std::memory_order_relaxed);
    const int shared_cut = shared == INT_MAX ? INT_MAX : shared + 1;
    const int cutoff =
        prune ? std::min({prev_best, best.cost, shared_cut}) : INT_MAX;
    kernel(t.out_rows(), c, std::span(batch.data(), filled), cutoff,
           std::span(costs.data(), filled));
    for (std::size_t i = 0; i < filled; ++i) {
      if (costs[i] < cutoff && costs[i] < best.cost) {
        best.cost = costs[i];
        best.mask = batch[i];
      }
    }
    if (best.cost < INT_MAX) atomic_min(class_best, best.cost);
  }
  return best;
}

ClassBest search_size_class(const Tournament& t, int c, int prev_best,
                            bool prune, int workers,
                            kernels::CostBatchFn kernel) {
  const int leads = t.order() - c + 1;
  std::vector<ClassBest> per_lead(leads);
  std::atomic<int> class_best{INT_MAX};
  std::atomic<int> next{0};
  auto work = [&] {
    for (int lead = next.fetch_add(1); lead < leads; lead = next.fetch_add(1)) {
      per_lead[lead] = scan_lead(t, c, lead, prev_best, prune, class_best, kernel);
    }
  };
  const int threads = std::clamp(workers, 1, leads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  // Lead order is lexicographic order, so the first strict minimum wins.
  ClassBest best;
  for (const ClassBest& b : per_lead) {
    if (b.cost < best.cost) best = b;
  }
  return best;
}

}  // namespace

bool is_module(const Tournament& t, VertexSet c) {
  check_subset(t, c);
  const VertexMask m = c.mask();
  for (VertexMask rest = t.vertices() & ~m; rest != 0; rest &= rest - 1) {
    const VertexMask hit = t.out_row(std::countr_zero(rest)) & m;
    if (hit != 0 && hit != m) return false;
  }
  return true;
}

VertexSet minimal_module_closure(const Tournament& t, int x, int y) {
  for (int v : {x, y}) {
    if (v < 0 || v >= t.order()) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in 0.." +
                      std::to_string(t.order() - 1));
    }
  }
  if (x == y) {
    throw Error(ErrorCode::kSameVertex, "closure needs two distinct vertices");
  }
  return VertexSet(closure_mask(t, bit(x) | bit(y)));
}

bool is_simple(const Tournament& t) {
  require_order_at_least_3(t, "simplicity");
  const int n = t.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (closure_mask(t, bit(x) | bit(y)) != t.vertices()) return false;
    }
  }
  return true;
}

int DecomposabilityGraph::edge_count() const {
  int total = 0;
  for (const Attachment& a : attachments) total += a.neighbors.size();
  return total;
}

ArcSet DecomposabilityGraph::reversal_arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(edge_count());
  for (const Attachment& a : attachments) {
    for (int y : a.neighbors.members()) {
      if (a.side == AttachSide::kInNeighbors) {
        arcs.push_back({y, a.vertex});
      } else {
        arcs.push_back({a.vertex, y});
      }
    }
  }
  return ArcSet::from_arcs(std::move(arcs));
}

ModuleCost module_cost(const Tournament& t, VertexSet c) {
  check_subset(t, c);
  const int n = t.order();
  if (c.size() < 2 || c.size() > n - 1) {
    throw Error(ErrorCode::kBadSize,
                "candidate size " + std::to_string(c.size()) +
                    " outside 2.." + std::to_string(n - 1));
  }
  ModuleCost result;
  result.graph.module = c;
  for (VertexMask rest = t.vertices() & ~c.mask(); rest != 0;
       rest &= rest - 1) {
    const int x = std::countr_zero(rest);
    const VertexMask in_part = t.in_row(x) & c.mask();
    const VertexMask out_part = t.out_row(x) & c.mask();
    DecomposabilityGraph::Attachment a;
    a.vertex = x;
    if (std::popcount(in_part) <= std::popcount(out_part)) {
      a.side = AttachSide::kInNeighbors;
      a.neighbors = VertexSet(in_part);
    } else {
      a.side = AttachSide::kOutNeighbors;
      a.neighbors = VertexSet(out_part);
    }
    result.cost += a.neighbors.size();
    result.graph.attachments.push_back(a);
  }
  if (!is_module(reverse_arcs(t, result.graph.reversal_arcs()), c)) {
    throw Error(ErrorCode::kInternal,
                "decomposability graph failed to produce a module");
  }
  return result;
}

int sC_lower_bound(const Tournament& t, int c, const DegreeProfile& profile) {
  const int n = t.order();
  if (c < 2 || c > n - 1) {
    throw Error(ErrorCode::kBadSize, "candidate size " + std::to_string(c) +
                                         " outside 2.." +
                                         std::to_string(n - 1));
  }
  int bound = 0;
  if (n - profile.min_degree <= c) bound = std::max(bound, profile.min_degree);
  if (c <= profile.min_separators) {
    bound = std::max(bound, profile.min_separators);
  }
  return bound;
}

int theorem1_bound(int n) {
  if (n < 3) {
    throw Error(ErrorCode::kTooSmall,
                "bound needs n >= 3, got " + std::to_string(n));
  }
  const int k = n / 4;
  switch (n % 4) {
    case 0: return 2 * k - 2;
    case 1: return 2 * k - 1;
    case 2: return 2 * k;
    default: return (n - 1) / 2;
  }
}

SimplicityReport arrow_simplicity(const Tournament& t,
                                  const SolverOptions& options) {
  require_order_at_least_3(t, "arrow-simplicity");
  const int n = t.order();
  if (n > options.max_order) {
    throw Error(ErrorCode::kTooLarge,
                "order " + std::to_string(n) + " exceeds the exact cap " +
                    std::to_string(options.max_order) +
                    "; use bounds-only mode");
  }
  const DegreeProfile profile = global_minima(t);
  SimplicityReport report;
  report.order = n;
  report.min_degree = profile.min_degree;
  report.min_separators = profile.min_separators;
  report.theorem1_bound = theorem1_bound(n);

  if (const VertexMask m = smallest_nontrivial_module(t); m != 0) {
    report.simple = false;
    report.s = 0;
    report.witness_module = VertexSet(m);
    return report;
  }
  report.simple = true;

  const kernels::CostBatchFn kernel = kernels::kernel_for(options.isa);
  // A witness of cost min(min_degree, min_separators) always exists, so the
  // search may start just above it.
  int best_cost = options.prune
                      ? std::min(profile.min_degree, profile.min_separators) + 1
                      : INT_MAX;
  VertexMask best_mask = 0;
  for (int c = 2; c <= n - 1; ++c) {
    const std::uint64_t count = binomial(n, c);
    if (options.prune && sC_lower_bound(t, c, profile) >= best_cost) {
      report.subsets_pruned += count;
      continue;
    }
    report.subsets_examined += count;
    const ClassBest found =
        search_size_class(t, c, best_cost, options.prune, options.workers,
                          kernel);
    if (found.cost < best_cost) {
      best_cost = found.cost;
      best_mask = found.mask;
    }
  }
  if (best_mask == 0) {
    throw Error(ErrorCode::kInternal, "exact search found no candidate");
  }
  const ModuleCost cost = module_cost(t, VertexSet(best_mask));
  if (cost.cost != best_cost) {
    throw Error(ErrorCode::kInternal, "kernel and direct cost disagree");
  }
  report.s = best_cost;
  report.witness_module = VertexSet(best_mask);
  report.witness_arcs = cost.graph.reversal_arcs();
  return report;
}

CheapWitnesses cheap_witnesses(const Tournament& t) {
  require_order_at_least_3(t, "cheap witnesses");
  const int n = t.order();
  CheapWitnesses w;
  int best = INT_MAX;
  for (int x = 0; x < n; ++x) {
    const int d = std::min(t.out_degree(x), t.in_degree(x));
    if (d < best) {
      best = d;
      w.vertex = x;
    }
  }
  {
    const int x = w.vertex;
    std::vector<Arc> arcs;
    if (t.in_degree(x) <= t.out_degree(x)) {
      for (int y : VertexSet(t.in_row(x)).members()) arcs.push_back({y, x});
    } else {
      for (int y : VertexSet(t.out_row(x)).members()) arcs.push_back({x, y});
    }
    w.vertex_arcs = ArcSet::from_arcs(std::move(arcs));
  }
  best = INT_MAX;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const int sep = pair_stats(t, x, y).separators;
      if (sep < best) {
        best = sep;
        w.pair_x = x;
        w.pair_y = y;
      }
    }
  }
  {
    const int x = w.pair_x;
    const int y = w.pair_y;
    std::vector<Arc> arcs;
    // z in v(x) & f(y): turn x -> z around so z dominates both.
    for (int z : VertexSet(t.out_row(x) & t.in_row(y)).members()) {
      arcs.push_back({x, z});
    }
    // z in f(x) & v(y): turn z -> x around so both dominate z.
    for (int z : VertexSet(t.in_row(x) & t.out_row(y)).members()) {
      arcs.push_back({z, x});
    }
    w.pair_arcs = ArcSet::from_arcs(std::move(arcs));
  }
  return w;
}

SimplicityReport bounds_report(const Tournament& t) {
  require_order_at_least_3(t, "bounds");
  const DegreeProfile profile = global_minima(t);
  SimplicityReport report;
  report.order = t.order();
  report.min_degree = profile.min_degree;
  report.min_separators = profile.min_separators;
  report.theorem1_bound = theorem1_bound(t.order());
  if (const VertexMask m = smallest_nontrivial_module(t); m != 0) {
    report.s = 0;
    report.witness_module = VertexSet(m);
    return report;
  }
  report.simple = true;
  report.exact = false;
  const CheapWitnesses w = cheap_witnesses(t);
  if (profile.min_separators < profile.min_degree) {
    report.s = profile.min_separators;
    report.witness_module = VertexSet(bit(w.pair_x) | bit(w.pair_y));
    report.witness_arcs = w.pair_arcs;
  } else {
    report.s = profile.min_degree;
    report.witness_module = VertexSet(t.vertices() & ~bit(w.vertex));
    report.witness_arcs = w.vertex_arcs;
  }
  return report;
}

int direct_oracle(const Tournament& t) {
  require_order_at_least_3(t, "direct oracle");
  const int n = t.order();
  if (n > kOracleCap) {
    throw Error(ErrorCode::kTooLarge,
                "direct oracle limited to n <= " + std::to_string(kOracleCap));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const int m = static_cast<int>(pairs.size());
  const std::vector<VertexMask> base(t.out_rows().begin(), t.out_rows().end());
  for (int size = 0; size <= m; ++size) {
    // Gosper's hack over m-bit words with `size` bits set.
    std::uint32_t sel = size == 0 ? 0 : (std::uint32_t{1} << size) - 1;
    const std::uint32_t limit = std::uint32_t{1} << m;
    while (sel < limit) {
      std::vector<VertexMask> rows = base;
      for (std::uint32_t s = sel; s != 0; s &= s - 1) {
        const auto [i, j] = pairs[std::countr_zero(s)];
        rows[i] ^= bit(j);
        rows[j] ^= bit(i);
      }
      if (!is_simple(Tournament::from_out_rows(rows))) return size;
      if (sel == 0) break;
      const std::uint32_t low = sel & -sel;
      const std::uint32_t ripple = sel + low;
      sel = (((ripple ^ sel) >> 2) / low) | ripple;
    }
  }
  throw Error(ErrorCode::kInternal, "no reversal set decomposes the input");
}

}  // namespace arrowsimp
