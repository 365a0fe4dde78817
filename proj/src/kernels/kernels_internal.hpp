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

#ifndef ARROWSIMP_SRC_KERNELS_KERNELS_INTERNAL_HPP_
#define ARROWSIMP_SRC_KERNELS_KERNELS_INTERNAL_HPP_

#include "arrowsimp/cost_kernels.hpp"

namespace arrowsimp::kernels {

// nullptr when the translation unit was built without the instruction set.
CostBatchFn avx2_kernel();
CostBatchFn neon_kernel();

}  // namespace arrowsimp::kernels

#endif  // ARROWSIMP_SRC_KERNELS_KERNELS_INTERNAL_HPP_
