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

#include <cstdlib>
#include <string>

#include "kernels_internal.hpp"

namespace arrowsimp::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa resolve_default() {
  if (const char* forced = std::getenv("ARROWSIMP_ISA")) {
    const std::string name(forced);
    if (name == "scalar") return Isa::kScalar;
    if (name == "avx2" && isa_available(Isa::kAvx2)) return Isa::kAvx2;
    if (name == "neon" && isa_available(Isa::kNeon)) return Isa::kNeon;
  }
  if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_available(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2: return avx2_kernel() != nullptr && cpu_has_avx2();
    // NEON is mandatory on AArch64.
    case Isa::kNeon: return neon_kernel() != nullptr;
  }
  return false;
}

CostBatchFn kernel_for(Isa isa) {
  if (!isa_available(isa)) {
    throw Error(ErrorCode::kInternal,
                std::string("cost kernel '") + std::string(isa_name(isa)) +
                    "' is not available on this machine");
  }
  switch (isa) {
    case Isa::kAvx2: return avx2_kernel();
    case Isa::kNeon: return neon_kernel();
    case Isa::kScalar: break;
  }
  return &module_costs_scalar;
}

Isa default_isa() {
  static const Isa isa = resolve_default();
  return isa;
}

}  // namespace arrowsimp::kernels
