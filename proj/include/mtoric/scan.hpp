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

#ifndef MTORIC_SCAN_HPP_
#define MTORIC_SCAN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtoric/atlas.hpp"
#include "mtoric/matroid.hpp"

namespace mtoric {

enum class ScanCheck {
  kBinaryVsMinor,      // no Δ = 3 pair  <=>  no U(2,4) minor
  kU36VsDelta,         // some Δ = 10 pair  <=>  a U(3,6) minor
  kCiClassification,   // loop-free, coloop-free, 2 <= r <= n-2: verdict per class
  kUniqueness,         // quadratic up to degree 3: ν = 1  <=>  binary and diameter <= 2
  kDeltaBounds,        // 2^(d-1) <= Δ <= C(2d-1, d)
  kCobaseBridge,       // bridge minor has 2Δ bases-cobases
  kCiHeredity,         // single-element minors of a CI matroid are CI
};

std::string_view scan_check_name(ScanCheck check);
std::optional<ScanCheck> parse_scan_check(std::string_view name);

struct ScanOptions {
  std::optional<int> rank;  // only this rank when set
  int degree_bound = 4;     // for the toric checks
  EnumerateOptions enumerate;
};

struct ScanFinding {
  Matroid matroid;
  std::string detail;
};

struct ScanReport {
  ScanCheck check = ScanCheck::kBinaryVsMinor;
  int n_max = 0;
  std::uint64_t examined = 0;  // classes the check applied to
  std::uint64_t skipped = 0;   // enumerated classes outside the check's domain
  std::uint64_t passed = 0;
  std::vector<ScanFinding> counterexamples;
  // kCiClassification: the classes with a CI verdict.
  std::vector<ScanFinding> flagged;

  bool clean() const noexcept { return counterexamples.empty(); }
};

// Applies one check to every class with n <= n_max, in (n, r, signature)
// order. Throws BudgetExceeded beyond the enumeration limits.
ScanReport scan(int n_max, ScanCheck check, const ScanOptions& options = {});

// The check applied to a single matroid.
struct CheckOutcome {
  bool applicable = true;
  bool holds = true;
  bool flagged = false;
  std::string detail;
};
CheckOutcome apply_check(const Matroid& m, ScanCheck check, int degree_bound = 4);

}  // namespace mtoric

#endif  // MTORIC_SCAN_HPP_
