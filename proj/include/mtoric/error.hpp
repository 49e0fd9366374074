// Copyright 2026 The Authors.
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

#ifndef MTORIC_ERROR_HPP_
#define MTORIC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtoric {

enum class ErrorCode {
  kInvalidGroundSet,
  kNotEquicardinal,
  kExchangeAxiomViolated,
  kRankOutOfRange,
  kEmptyPresentation,
  kInvalidSubset,
  kGroundSetTooLarge,
  kRankTooLargeForExhaustiveSearch,
  kNotABase,
  kIdenticalBases,
  kTargetLargerThanHost,
  kFiberCapExceeded,
  kNotRankTwo,
  kRankTooSmall,
  kGroundSetTooLargeForCanonicalization,
  kBudgetExceeded,
  kSearchFailed,
  kParseError,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class MatroidError : public std::runtime_error {
 public:
  MatroidError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Budget-type failures (caps and search limits) as opposed to bad input.
  bool is_budget_error() const noexcept {
    return code_ == ErrorCode::kFiberCapExceeded ||
           code_ == ErrorCode::kBudgetExceeded ||
           code_ == ErrorCode::kRankTooLargeForExhaustiveSearch ||
           code_ == ErrorCode::kGroundSetTooLargeForCanonicalization;
  }

 private:
  ErrorCode code_;
};

}  // namespace mtoric

#endif  // MTORIC_ERROR_HPP_
