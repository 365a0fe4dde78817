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

// NEON variant: two candidates per register. vcnt gives per-byte counts,
// which pairwise widening adds fold into one count per 64-bit lane.

#include "kernels_internal.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace arrowsimp::kernels {
namespace {

inline uint64x2_t popcount_u64(uint64x2_t v) {
  return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}

inline uint64x2_t costs2(std::span<const VertexMask> out_rows,
                         uint64x2_t cand, uint64x2_t size, int cutoff) {
  const int n = static_cast<int>(out_rows.size());
  const uint64x2_t zero = vdupq_n_u64(0);
  const uint64x2_t one = vdupq_n_u64(1);
  const uint64x2_t limit = vdupq_n_u64(static_cast<std::uint64_t>(cutoff));
  uint64x2_t acc = zero;
  for (int x = 0; x < n; ++x) {
    const uint64x2_t row = vdupq_n_u64(out_rows[x]);
    const uint64x2_t p = popcount_u64(vandq_u64(row, cand));
    const uint64x2_t q = vsubq_u64(size, p);
    const uint64x2_t m = vreinterpretq_u64_u32(
        vminq_u32(vreinterpretq_u32_u64(p), vreinterpretq_u32_u64(q)));
    const uint64x2_t member =
        vandq_u64(vshlq_u64(cand, vdupq_n_s64(-x)), one);
    const uint64x2_t outside = vceqq_u64(member, zero);
    acc = vaddq_u64(acc, vandq_u64(m, outside));
    if ((x & 3) == 3) {
      const uint64x2_t done = vcgeq_u64(acc, limit);
      if (vgetq_lane_u64(done, 0) != 0 && vgetq_lane_u64(done, 1) != 0) break;
    }
  }
  return acc;
}

void module_costs_neon(std::span<const VertexMask> out_rows, int c,
                       std::span<const VertexMask> candidates, int cutoff,
                       std::span<int> costs) {
  const uint64x2_t size = vdupq_n_u64(static_cast<std::uint64_t>(c));
  std::size_t i = 0;
  for (; i + 2 <= candidates.size(); i += 2) {
    const uint64x2_t acc =
        costs2(out_rows, vld1q_u64(candidates.data() + i), size, cutoff);
    costs[i] = static_cast<int>(vgetq_lane_u64(acc, 0));
    costs[i + 1] = static_cast<int>(vgetq_lane_u64(acc, 1));
  }
  if (i < candidates.size()) {
    const uint64x2_t acc =
        costs2(out_rows, vdupq_n_u64(candidates[i]), size, cutoff);
    costs[i] = static_cast<int>(vgetq_lane_u64(acc, 0));
  }
}

}  // namespace

CostBatchFn neon_kernel() { return &module_costs_neon; }

}  // namespace arrowsimp::kernels

#else

namespace arrowsimp::kernels {
CostBatchFn neon_kernel() { return nullptr; }
}  // namespace arrowsimp::kernels

#endif
