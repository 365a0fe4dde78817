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

#ifndef ARROWSIMP_ERROR_HPP_
#define ARROWSIMP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrowsimp {

enum class ErrorCode {
  kNotSquare,
  kDiagonalSet,
  kNotAntisymmetric,
  kVertexOutOfRange,
  kSameVertex,
  kTooSmall,
  kTooLarge,
  kArcAbsent,
  kDuplicate,
  kDeletesEverything,
  kBadSize,
  kNotPrime,
  kWrongResidueClass,
  kNotDoublyRegular,
  kNotNearRegular,
  kWrongOrder,
  kPartitionMismatch,
  kConditionsViolated,
  kInvariantViolation,
  kNotNormalized,
  kWrongShape,
  kTooLargeForExhaustive,
  kParseError,
  kInternal,
};

std::string_view ErrorName(ErrorCode code);

// All library failures are reported through this type; `code()` identifies
// the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arrowsimp

#endif  // ARROWSIMP_ERROR_HPP_
