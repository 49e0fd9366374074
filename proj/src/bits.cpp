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

#include "mtoric/bits.hpp"

#include <limits>
#include <string>

#include "mtoric/error.hpp"

namespace mtoric {

std::vector<int> to_elements(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](int b) { out.push_back(b + 1); });
  return out;
}

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSet) {
      throw MatroidError(ErrorCode::kInvalidSubset,
                         "element " + std::to_string(e) + " out of range");
    }
    m |= bit(e - 1);
  }
  return m;
}

Mask mask_of(std::initializer_list<int> elements) {
  return mask_of(std::span<const int>(elements.begin(), elements.size()));
}

std::uint64_t binomial(int n, int k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(result) * factor / i;
    if (wide > kMax) return kMax;
    result = static_cast<std::uint64_t>(wide);
  }
  return result;
}

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidGroundSet: return "InvalidGroundSet";
    case ErrorCode::kNotEquicardinal: return "NotEquicardinal";
    case ErrorCode::kExchangeAxiomViolated: return "ExchangeAxiomViolated";
    case ErrorCode::kRankOutOfRange: return "RankOutOfRange";
    case ErrorCode::kEmptyPresentation: return "EmptyPresentation";
    case ErrorCode::kInvalidSubset: return "InvalidSubset";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kRankTooLargeForExhaustiveSearch:
      return "RankTooLargeForExhaustiveSearch";
    case ErrorCode::kNotABase: return "NotABase";
    case ErrorCode::kIdenticalBases: return "IdenticalBases";
    case ErrorCode::kTargetLargerThanHost: return "TargetLargerThanHost";
    case ErrorCode::kFiberCapExceeded: return "FiberCapExceeded";
    case ErrorCode::kNotRankTwo: return "NotRankTwo";
    case ErrorCode::kRankTooSmall: return "RankTooSmall";
    case ErrorCode::kGroundSetTooLargeForCanonicalization:
      return "GroundSetTooLargeForCanonicalization";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kSearchFailed: return "SearchFailed";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace mtoric
