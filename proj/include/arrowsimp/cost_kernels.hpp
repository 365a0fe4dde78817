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

// Batched module-cost kernels. For a candidate vertex set C of size c the
// cost of turning C into a module is
//
//   sum over x outside C of min(|f(x) & C|, |v(x) & C|)
//
// and since f(x) & C and v(x) & C partition C for x outside C, only the
// out-row popcount is needed: min(p, c - p) with p = |v(x) & C|.
//
// Every variant honors the same contract: costs[i] is exact whenever it is
// below `cutoff`; otherwise it is some value >= cutoff (evaluation of that
// candidate may have stopped early).

#ifndef ARROWSIMP_COST_KERNELS_HPP_
#define ARROWSIMP_COST_KERNELS_HPP_

#include <span>
#include <string_view>

#include "arrowsimp/tournament.hpp"

namespace arrowsimp::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

// All candidates in one call share the same size `c`.
using CostBatchFn = void (*)(std::span<const VertexMask> out_rows, int c,
                             std::span<const VertexMask> candidates,
                             int cutoff, std::span<int> costs);

void module_costs_scalar(std::span<const VertexMask> out_rows, int c,
                         std::span<const VertexMask> candidates, int cutoff,
                         std::span<int> costs);

// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

// Kernel for a specific variant; throws Internal if unavailable.
CostBatchFn kernel_for(Isa isa);

// Widest available variant, unless ARROWSIMP_ISA=scalar|avx2|neon in the
// environment names another available one. Resolved once per process.
Isa default_isa();

}  // namespace arrowsimp::kernels

#endif  // ARROWSIMP_COST_KERNELS_HPP_
