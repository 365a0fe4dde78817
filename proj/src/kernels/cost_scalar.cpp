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

#include <algorithm>
#include <bit>

#include "arrowsimp/cost_kernels.hpp"

namespace arrowsimp::kernels {

void module_costs_scalar(std::span<const VertexMask> out_rows, int c,
                         std::span<const VertexMask> candidates, int cutoff,
                         std::span<int> costs) {
  const int n = static_cast<int>(out_rows.size());
  const VertexMask all = prefix_mask(n);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const VertexMask cand = candidates[i];
    int cost = 0;
    for (VertexMask outside = all & ~cand; outside != 0;
         outside &= outside - 1) {
      const int x = std::countr_zero(outside);
      const int p = std::popcount(out_rows[x] & cand);
      cost += std::min(p, c - p);
      if (cost >= cutoff) break;
    }
    costs[i] = cost;
  }
}

}  // namespace arrowsimp::kernels
