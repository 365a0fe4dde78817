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

#include "arrowsimp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "arrowsimp/constructions.hpp"

namespace arrowsimp {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* SuiteReport::find(std::string_view check) const {
  for (const CheckResult& c : checks) {
    if (c.name == check) return &c;
  }
  return nullptr;
}

const Witness* SuiteReport::first_failure() const {
  for (const CheckResult& c : checks) {
    if (c.first_failure) return &*c.first_failure;
  }
  return nullptr;
}

CheckResult& SuiteReport::slot(std::string_view check) {
  for (CheckResult& c : checks) {
    if (c.name == check) return c;
  }
  CheckResult fresh;
  fresh.name = std::string(check);
  checks.push_back(std::move(fresh));
  return checks.back();
}

void SuiteReport::tally(const std::string& key, std::uint64_t count) {
  tallies[key] += count;
}

void SuiteReport::merge(const SuiteReport& other) {
  instances += other.instances;
  for (const CheckResult& c : other.checks) {
    CheckResult& mine = slot(c.name);
    mine.instances += c.instances;
    if (!mine.first_failure && c.first_failure) {
      mine.first_failure = c.first_failure;
    }
    mine.failures += c.failures;
  }
  for (const auto& [key, count] : other.tallies) tallies[key] += count;
}

namespace {

std::int64_t choose2(std::int64_t v) { return v * (v - 1) / 2; }

std::string pair_label(int x, int y) {
  return "pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
}

Witness make_witness(const std::string& instance, std::string detail,
                     const Tournament& t) {
  return Witness{instance, std::move(detail), t};
}

std::string deletion_label(int q, VertexSet removed) {
  std::string s = "paley q=" + std::to_string(q) + " minus {";
  bool first = true;
  for (int v : removed.members()) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

SuiteReport sweep_instance(const SweepConfig& config, std::uint64_t index) {
  const bool exhaustive = config.mode == SweepConfig::Mode::kExhaustive;
  const Tournament t = exhaustive
                           ? tournament_from_code(config.n, index)
                           : random_tournament(config.n, config.seed + index);
  const std::string id =
      exhaustive ? "exhaustive n=" + std::to_string(config.n) +
                       " code=" + std::to_string(index)
                 : "random n=" + std::to_string(config.n) +
                       " seed=" + std::to_string(config.seed + index);
  SuiteReport out;
  out.instances = 1;
  out.merge(identity_suite(t, id));
  SolverOptions options;
  options.workers = 1;
  const SimplicityReport rep = arrow_simplicity(t, options);
  out.merge(bound_suite(t, rep, id));
  if (config.n <= kOracleCap) {
    const int oracle = direct_oracle(t);
    out.record("oracle_equivalence", oracle == rep.s, [&] {
      return make_witness(id,
                          "solver s=" + std::to_string(rep.s) +
                              ", oracle s=" + std::to_string(oracle),
                          t);
    });
  }
  out.tally("s=" + std::to_string(rep.s));
  // Sub-suites count their own instance; keep one per tournament.
  out.instances = 1;
  return out;
}

}  // namespace

SuiteReport identity_suite(const Tournament& t, const std::string& instance) {
  const int n = t.order();
  if (n < 3) {
    throw Error(ErrorCode::kTooSmall,
                "identity suite needs n >= 3, got " + std::to_string(n));
  }
  SuiteReport r;
  r.suite = "identities";
  r.instances = 1;

  std::int64_t out_sum = 0;
  std::int64_t in_sum = 0;
  std::int64_t product_sum = 0;
  std::int64_t out_choose2 = 0;
  std::int64_t in_choose2 = 0;
  bool regular = true;
  for (int z = 0; z < n; ++z) {
    const std::int64_t dp = t.out_degree(z);
    const std::int64_t dm = t.in_degree(z);
    out_sum += dp;
    in_sum += dm;
    product_sum += dp * dm;
    out_choose2 += choose2(dp);
    in_choose2 += choose2(dm);
    if (2 * dp != n - 1) regular = false;
  }
  const std::int64_t half = static_cast<std::int64_t>(n) * (n - 1) / 2;
  r.record("degree_sum", out_sum == half && in_sum == half, [&] {
    return make_witness(instance,
                        "out-degree sum " + std::to_string(out_sum) +
                            ", in-degree sum " + std::to_string(in_sum) +
                            ", expected " + std::to_string(half),
                        t);
  });

  std::int64_t sep_sum = 0;
  std::int64_t in_pair_sum = 0;
  std::int64_t out_pair_sum = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const PairStats s = pair_stats(t, x, y);
      sep_sum += s.separators;
      in_pair_sum += s.in_pair;
      out_pair_sum += s.out_pair;
      r.record("pair_partition",
               s.separators + s.in_pair + s.out_pair == n - 2 &&
                   s.out_pair + s.in_pair + s.out_in + s.in_out == n - 2,
               [&] {
                 return make_witness(instance, pair_label(x, y) +
                                                   " counts do not sum to n-2",
                                     t);
               });
      // Both orientations of the pair.
      const bool lemma = s.in_pair - s.out_pair ==
                             t.in_degree(x) - t.out_degree(y) &&
                         s.in_pair - s.out_pair ==
                             t.in_degree(y) - t.out_degree(x);
      r.record("in_out_pair_difference", lemma, [&] {
        return make_witness(instance,
                            pair_label(x, y) +
                                ": in-pair minus out-pair differs from "
                                "in-degree minus out-degree",
                            t);
      });
      r.record("regular_pair_balance", !regular || s.in_pair == s.out_pair,
               [&] {
                 return make_witness(instance,
                                     pair_label(x, y) +
                                         " unbalanced in a regular tournament",
                                     t);
               });
    }
  }
  r.record("separator_sum", sep_sum == product_sum, [&] {
    return make_witness(instance,
                        "separator sum " + std::to_string(sep_sum) +
                            " != degree product sum " +
                            std::to_string(product_sum),
                        t);
  });
  r.record("in_pair_sum", in_pair_sum == out_choose2, [&] {
    return make_witness(instance,
                        "in-pair sum " + std::to_string(in_pair_sum) +
                            " != sum of C(out-degree, 2) " +
                            std::to_string(out_choose2),
                        t);
  });
  r.record("out_pair_sum", out_pair_sum == in_choose2, [&] {
    return make_witness(instance,
                        "out-pair sum " + std::to_string(out_pair_sum) +
                            " != sum of C(in-degree, 2) " +
                            std::to_string(in_choose2),
                        t);
  });
  r.tally("separator_sum", static_cast<std::uint64_t>(sep_sum));
  return r;
}

SuiteReport bound_suite(const Tournament& t, const SimplicityReport& report,
                        const std::string& instance) {
  if (!report.exact || report.order != t.order()) {
    throw Error(ErrorCode::kWrongShape,
                "bound suite needs an exact report for this tournament");
  }
  const int n = t.order();
  const DegreeProfile p = global_minima(t);
  const int floor_half = (n - 1) / 2;
  const int s = report.s;
  SuiteReport r;
  r.suite = "bounds";
  r.instances = 1;
  auto fail = [&](std::string detail) {
    return [&instance, &t, detail = std::move(detail)] {
      return make_witness(instance, detail, t);
    };
  };
  r.record("min_degree_at_most_half", p.min_degree <= floor_half,
           fail("min degree " + std::to_string(p.min_degree) +
                " exceeds floor((n-1)/2)"));
  r.record("min_separators_at_most_half", p.min_separators <= floor_half,
           fail("min separators " + std::to_string(p.min_separators) +
                " exceeds floor((n-1)/2)"));
  r.record("s_at_most_min_degree", s <= p.min_degree,
           fail("s=" + std::to_string(s) + " > min degree " +
                std::to_string(p.min_degree)));
  r.record("s_at_most_min_separators", s <= p.min_separators,
           fail("s=" + std::to_string(s) + " > min separators " +
                std::to_string(p.min_separators)));
  const int bound = theorem1_bound(n);
  r.record("theorem1", s <= bound,
           fail("s=" + std::to_string(s) + " exceeds the bound " +
                std::to_string(bound)));
  const bool doubly_regular = is_doubly_regular(t).has_value();
  const bool at_max = 2 * s == n - 1;
  r.record("equality_iff_doubly_regular", at_max == doubly_regular,
           fail(std::string("s ") + (at_max ? "=" : "<") +
                " (n-1)/2 but the tournament is " +
                (doubly_regular ? "" : "not ") + "doubly regular"));
  if (doubly_regular) r.tally("doubly_regular");

  const CheapWitnesses cheap = cheap_witnesses(t);
  const bool vertex_ok =
      cheap.vertex_arcs.size() == p.min_degree &&
      is_module(reverse_arcs(t, cheap.vertex_arcs),
                VertexSet(t.vertices() & ~bit(cheap.vertex)));
  const bool pair_ok =
      cheap.pair_arcs.size() == p.min_separators &&
      is_module(reverse_arcs(t, cheap.pair_arcs),
                VertexSet(bit(cheap.pair_x) | bit(cheap.pair_y)));
  r.record("cheap_witnesses", vertex_ok && pair_ok,
           fail("cheap witness has the wrong size or is not a module"));

  const int module_size = report.witness_module.size();
  const bool witness_ok =
      module_size >= 2 && module_size <= n - 1 &&
      report.witness_arcs.size() == s &&
      is_module(reverse_arcs(t, report.witness_arcs), report.witness_module);
  r.record("witness_valid", witness_ok,
           fail("reported witness does not certify s=" + std::to_string(s)));
  return r;
}

SuiteReport near_regular_4k_sum(const Tournament& t,
                                const std::string& instance) {
  const int n = t.order();
  if (n % 4 != 0 ||
      regularity_class(t).kind != Regularity::Kind::kNearRegular) {
    throw Error(ErrorCode::kWrongShape,
                "needs a near-regular tournament on 4k vertices");
  }
  const std::int64_t k = n / 4;
  std::int64_t sum = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) sum += pair_stats(t, x, y).separators;
  }
  const std::int64_t want = 8 * k * k * (2 * k - 1);
  SuiteReport r;
  r.suite = "near_regular_4k_sum";
  r.instances = 1;
  r.record("separator_sum_8k2_2k_minus_1", sum == want, [&] {
    return make_witness(instance,
                        "separator sum " + std::to_string(sum) +
                            ", expected " + std::to_string(want),
                        t);
  });
  r.tally("separator_sum", static_cast<std::uint64_t>(sum));
  return r;
}

SuiteReport characterize_4k2(const Tournament& t, const SolverOptions& options,
                             const std::string& instance) {
  const int n = t.order();
  if (n % 4 != 2) {
    throw Error(ErrorCode::kWrongShape,
                "characterization needs n = 4k+2, got " + std::to_string(n));
  }
  const int k = (n - 2) / 4;
  const SimplicityReport rep = arrow_simplicity(t, options);

  bool extends = false;
  std::string why = "not near-regular";
  if (regularity_class(t).kind == Regularity::Kind::kNearRegular) {
    const NearRegularPartition p = near_regular_partition(t);
    if (!check_C1_C2(t, p)) {
      why = "separator pattern fails";
    } else {
      try {
        const Tournament ext = lakhlifi_extend(t, p);
        extends = is_doubly_regular(ext) == k;
        why = extends ? "extends" : "extension not doubly regular";
      } catch (const Error& e) {
        why = e.what();
      }
    }
  }
  SuiteReport r;
  r.suite = "characterize";
  r.instances = 1;
  r.record("max_s_implies_extension", rep.s != 2 * k || extends, [&] {
    return make_witness(instance,
                        "s=2k=" + std::to_string(2 * k) +
                            " but no doubly regular extension: " + why,
                        t);
  });
  r.record("extension_implies_max_s", !extends || rep.s == 2 * k, [&] {
    return make_witness(instance,
                        "extends to a doubly regular tournament but s=" +
                            std::to_string(rep.s),
                        t);
  });
  r.tally("s=" + std::to_string(rep.s));
  if (extends) r.tally("extends");
  return r;
}

SuiteReport sweep(const SweepConfig& config) {
  if (config.n < 3) {
    throw Error(ErrorCode::kTooSmall,
                "sweeps need n >= 3, got " + std::to_string(config.n));
  }
  std::uint64_t total = config.count;
  if (config.mode == SweepConfig::Mode::kExhaustive) {
    if (config.n > kExhaustiveCap) {
      throw Error(ErrorCode::kTooLargeForExhaustive,
                  "exhaustive sweeps are limited to n <= " +
                      std::to_string(kExhaustiveCap));
    }
    total = labeled_tournament_count(config.n);
  }
  constexpr std::uint64_t kChunk = 256;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<SuiteReport> partial(chunks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next.fetch_add(1); c < chunks;
         c = next.fetch_add(1)) {
      const std::uint64_t end = std::min(total, (c + 1) * kChunk);
      for (std::uint64_t i = c * kChunk; i < end; ++i) {
        partial[c].merge(sweep_instance(config, i));
      }
    }
  };
  const int threads = static_cast<int>(
      std::clamp<std::uint64_t>(config.workers, 1, std::max<std::uint64_t>(chunks, 1)));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  SuiteReport out;
  out.suite = "sweep";
  for (const SuiteReport& p : partial) out.merge(p);
  return out;
}

SuiteReport identity_sample(std::uint64_t count, std::uint64_t seed,
                            int min_n, int max_n) {
  if (min_n < 3 || max_n < min_n) {
    throw Error(ErrorCode::kTooSmall, "identity sampling needs 3 <= min_n <= max_n");
  }
  const std::uint64_t span = static_cast<std::uint64_t>(max_n - min_n + 1);
  SuiteReport out;
  out.suite = "identities";
  for (std::uint64_t i = 0; i < count; ++i) {
    const int n = min_n + static_cast<int>(i % span);
    const std::uint64_t s = seed + i;
    out.merge(identity_suite(random_tournament(n, s),
                             "random n=" + std::to_string(n) +
                                 " seed=" + std::to_string(s)));
  }
  return out;
}

SuiteReport identity_exhaustive(int n) {
  if (n < 3) {
    throw Error(ErrorCode::kTooSmall, "identity suite needs n >= 3");
  }
  if (n > kExhaustiveCap) {
    throw Error(ErrorCode::kTooLargeForExhaustive,
                "exhaustive sweeps are limited to n <= " +
                    std::to_string(kExhaustiveCap));
  }
  SuiteReport out;
  out.suite = "identities";
  const std::uint64_t total = labeled_tournament_count(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    out.merge(identity_suite(tournament_from_code(n, code),
                             "exhaustive n=" + std::to_string(n) +
                                 " code=" + std::to_string(code)));
  }
  return out;
}

SuiteReport theorem9_suite(int q, int workers) {
  const Tournament paley = paley_tournament(q);
  const int k = (q - 3) / 4;
  if (k < 2) {
    throw Error(ErrorCode::kWrongShape,
                "vertex-deletion tightness needs k >= 2 (q >= 11)");
  }
  SolverOptions options;
  options.workers = workers;
  SuiteReport r;
  r.suite = "theorem9";
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      const VertexSet removed = VertexSet::from_members({a, b});
      const Tournament t = delete_vertices(paley, removed);
      const int s = arrow_simplicity(t, options).s;
      ++r.instances;
      r.record("two_deleted_s_is_2k_minus_1", s == 2 * k - 1, [&] {
        return make_witness(deletion_label(q, removed),
                            "s=" + std::to_string(s), t);
      });
      r.tally("two_deleted s=" + std::to_string(s));
      for (int c = b + 1; c < q; ++c) {
        const VertexSet removed3 = VertexSet::from_members({a, b, c});
        const Tournament t3 = delete_vertices(paley, removed3);
        const int s3 = arrow_simplicity(t3, options).s;
        ++r.instances;
        r.record("three_deleted_s_is_2k_minus_2", s3 == 2 * k - 2, [&] {
          return make_witness(deletion_label(q, removed3),
                              "s=" + std::to_string(s3), t3);
        });
        r.tally("three_deleted s=" + std::to_string(s3));
      }
    }
  }
  return r;
}

SuiteReport lakhlifi_suite(int q) {
  const Tournament paley = paley_tournament(q);
  const std::string paley_id = "paley q=" + std::to_string(q);
  SuiteReport r;
  r.suite = "lakhlifi";
  r.record("pair_profile", dr_pair_profile_check(paley), [&] {
    return make_witness(paley_id, "pair profile is not (k,k,k,k+1)", paley);
  });
  for (int v = 0; v < q; ++v) {
    const VertexSet removed = VertexSet::from_members({v});
    const std::string id = deletion_label(q, removed);
    const Tournament t = delete_vertices(paley, removed);
    ++r.instances;
    const bool near_regular =
        t.order() % 4 == 2 &&
        regularity_class(t).kind == Regularity::Kind::kNearRegular;
    r.record("near_regular", near_regular,
             [&] { return make_witness(id, "deletion is not near-regular", t); });
    if (!near_regular) continue;
    const NearRegularPartition p = near_regular_partition(t);
    const bool conditions = check_C1_C2(t, p);
    r.record("separator_pattern", conditions, [&] {
      return make_witness(id, "separator pattern fails", t);
    });
    if (!conditions) continue;
    r.record("arc_case_table", lemma_lakhlifi_cases(t, p), [&] {
      return make_witness(id, "an arc violates the class case table", t);
    });
    const Tournament ext = lakhlifi_extend(t, p);
    r.record("extension_doubly_regular", is_doubly_regular(ext) == p.k, [&] {
      return make_witness(id, "extension is not doubly regular", ext);
    });
    // Paley-q with v moved to the last label.
    std::vector<int> order;
    for (int u = 0; u < q; ++u) {
      if (u != v) order.push_back(u);
    }
    order.push_back(v);
    bool restores = true;
    for (int i = 0; i < q && restores; ++i) {
      for (int j = 0; j < q; ++j) {
        if (i != j &&
            ext.dominates(i, j) != paley.dominates(order[i], order[j])) {
          restores = false;
          break;
        }
      }
    }
    r.record("extension_restores_deleted_vertex", restores, [&] {
      return make_witness(id, "extension differs from the original", ext);
    });
  }
  return r;
}

SuiteReport characterize_suite(int q, int workers) {
  const Tournament paley = paley_tournament(q);
  const int k = (q - 3) / 4;
  SolverOptions options;
  options.workers = workers;
  SuiteReport r;
  r.suite = "characterize";
  for (int v = 0; v < q; ++v) {
    const VertexSet removed = VertexSet::from_members({v});
    const std::string id = deletion_label(q, removed);
    const Tournament t = delete_vertices(paley, removed);
    SuiteReport one = characterize_4k2(t, options, id);
    const bool at_max = one.tallies.count("s=" + std::to_string(2 * k)) > 0;
    one.record("deletion_s_is_2k", at_max, [&] {
      return make_witness(id, "s differs from 2k=" + std::to_string(2 * k), t);
    });
    r.merge(one);
  }
  return r;
}

}  // namespace arrowsimp
