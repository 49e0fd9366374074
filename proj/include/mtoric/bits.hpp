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

#ifndef MTORIC_BITS_HPP_
#define MTORIC_BITS_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace mtoric {

// Subsets of the ground set are bit masks; element e (1-based) is bit e-1.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSet = 64;

constexpr Mask bit(int pos) noexcept { return Mask{1} << pos; }

constexpr Mask low_mask(int n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

template <class F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

// Next mask with the same popcount in numeric order (Gosper). Undefined for 0.
constexpr Mask next_same_popcount(Mask x) noexcept {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Visits every k-subset of {0..n-1} in increasing numeric (colex) order.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  const Mask limit = low_mask(n);
  for (Mask s = low_mask(k);;) {
    f(s);
    if (s == (limit & ~low_mask(n - k))) break;
    s = next_same_popcount(s);
  }
}

// Visits every submask of `m`, including 0 and `m` itself.
template <class F>
void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

// Packs the bits of x selected by keep into the low bits, preserving order.
constexpr Mask compress(Mask x, Mask keep) noexcept {
  Mask out = 0;
  int pos = 0;
  for_each_bit(keep, [&](int b) {
    if (x & bit(b)) out |= bit(pos);
    ++pos;
  });
  return out;
}

// Inverse of compress: spreads the low bits of x onto the positions of keep.
constexpr Mask expand(Mask x, Mask keep) noexcept {
  Mask out = 0;
  int pos = 0;
  for_each_bit(keep, [&](int b) {
    if (x & bit(pos)) out |= bit(b);
    ++pos;
  });
  return out;
}

std::vector<int> to_elements(Mask m);
Mask mask_of(std::span<const int> elements);
Mask mask_of(std::initializer_list<int> elements);

// Exact binomial coefficient; saturates at UINT64_MAX on overflow.
std::uint64_t binomial(int n, int k) noexcept;

}  // namespace mtoric

#endif  // MTORIC_BITS_HPP_
