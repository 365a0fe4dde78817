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

// AVX2 variant: four candidates per register, one 64-bit lane each. The
// per-lane popcount is the nibble-table shuffle followed by a byte
// sum-of-absolute-differences against zero.

#include "kernels_internal.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <algorithm>
#include <array>

namespace arrowsimp::kernels {
namespace {

inline __m256i popcount_epi64(__m256i v) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3,
                                         2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3,
                                         1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_nibble = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_nibble);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibble);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo),
                                         _mm256_shuffle_epi8(table, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

// Evaluates exactly four candidates.
inline __m256i costs4(std::span<const VertexMask> out_rows, __m256i cand,
                      __m256i size, int cutoff) {
  const int n = static_cast<int>(out_rows.size());
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i limit = _mm256_set1_epi64x(static_cast<long long>(cutoff) - 1);
  __m256i acc = zero;
  for (int x = 0; x < n; ++x) {
    const __m256i row =
        _mm256_set1_epi64x(static_cast<long long>(out_rows[x]));
    const __m256i p = popcount_epi64(_mm256_and_si256(row, cand));
    const __m256i q = _mm256_sub_epi64(size, p);
    // Both operands are below 65, so the high dwords are zero and an
    // unsigned 32-bit min is a 64-bit min.
    const __m256i m = _mm256_min_epu32(p, q);
    const __m256i member = _mm256_and_si256(
        _mm256_srl_epi64(cand, _mm_cvtsi32_si128(x)), one);
    const __m256i outside = _mm256_cmpeq_epi64(member, zero);
    acc = _mm256_add_epi64(acc, _mm256_and_si256(m, outside));
    if ((x & 3) == 3) {
      const __m256i done = _mm256_cmpgt_epi64(acc, limit);
      if (_mm256_movemask_pd(_mm256_castsi256_pd(done)) == 0xF) break;
    }
  }
  return acc;
}

void module_costs_avx2(std::span<const VertexMask> out_rows, int c,
                       std::span<const VertexMask> candidates, int cutoff,
                       std::span<int> costs) {
  const __m256i size = _mm256_set1_epi64x(c);
  std::size_t i = 0;
  alignas(32) std::array<long long, 4> lanes{};
  for (; i + 4 <= candidates.size(); i += 4) {
    const __m256i cand = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(candidates.data() + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()),
                       costs4(out_rows, cand, size, cutoff));
    for (int l = 0; l < 4; ++l) costs[i + l] = static_cast<int>(lanes[l]);
  }
  if (i < candidates.size()) {
    alignas(32) std::array<VertexMask, 4> tail{};
    const std::size_t rest = candidates.size() - i;
    for (std::size_t l = 0; l < 4; ++l) {
      tail[l] = candidates[i + std::min(l, rest - 1)];
    }
    const __m256i cand =
        _mm256_load_si256(reinterpret_cast<const __m256i*>(tail.data()));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()),
                       costs4(out_rows, cand, size, cutoff));
    for (std::size_t l = 0; l < rest; ++l) {
      costs[i + l] = static_cast<int>(lanes[l]);
    }
  }
}

}  // namespace

CostBatchFn avx2_kernel() { return &module_costs_avx2; }

}  // namespace arrowsimp::kernels

#else

namespace arrowsimp::kernels {
CostBatchFn avx2_kernel() { return nullptr; }
}  // namespace arrowsimp::kernels

#endif
