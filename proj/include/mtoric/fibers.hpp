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

#ifndef MTORIC_FIBERS_HPP_
#define MTORIC_FIBERS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mtoric/matroid.hpp"

namespace mtoric {

// Multidegree of a monomial in the base variables: how often each ground
// element occurs in the multiset union of its bases.
struct DegreeVector {
  std::vector<std::uint8_t> counts;

  int total() const noexcept {
    int t = 0;
    for (auto c : counts) t += c;
    return t;
  }

  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

DegreeVector degree_of(int n, std::span<const Mask> bases);

// Unordered pair of distinct bases, stored with first < second.
struct BasePair {
  Mask first = 0;
  Mask second = 0;

  friend auto operator<=>(const BasePair&, const BasePair&) = default;
};

// An equivalence class of basis pairs with equal multiset union.
struct PairClass {
  DegreeVector key;
  std::vector<BasePair> members;  // canonical order

  std::size_t delta() const noexcept { return members.size(); }
  // |B1 \ B2| for any member.
  int distance() const noexcept {
    return popcount(members.front().first ^ members.front().second) / 2;
  }
};

PairClass pair_class(const Matroid& m, Mask b1, Mask b2);

// Size of the class of {b1, b2} without materializing it.
std::size_t delta(const Matroid& m, Mask b1, Mask b2);

// Every class once, ordered by its least member pair.
std::vector<PairClass> class_census(const Matroid& m);

struct DeltaRange {
  int distance = 0;
  std::size_t min_delta = 0;
  std::size_t max_delta = 0;
  std::uint64_t lower_bound = 0;  // 2^(d-1)
  std::uint64_t upper_bound = 0;  // C(2d-1, d)
  std::uint64_t classes = 0;
};

struct DeltaBoundViolation {
  BasePair pair;
  std::size_t delta = 0;
};

struct DeltaBoundsReport {
  bool holds = true;
  std::vector<DeltaRange> by_distance;  // ascending distance
  std::vector<DeltaBoundViolation> violations;
};

DeltaBoundsReport delta_bounds_check(const Matroid& m);

struct CobaseBridge {
  MinorResult minor;
  std::uint64_t bases_cobases = 0;
};

// (M / (B1 ∩ B2)) restricted to B1 △ B2; its base-cobase count is 2·Δ.
CobaseBridge cobase_bridge(const Matroid& m, Mask b1, Mask b2);

}  // namespace mtoric

#endif  // MTORIC_FIBERS_HPP_
