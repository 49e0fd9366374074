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

#ifndef MTORIC_MINORS_HPP_
#define MTORIC_MINORS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "mtoric/matroid.hpp"

namespace mtoric {

// (M \ deleted) / contracted is isomorphic to the target; iso[i] is the
// element of the host playing target element i+1.
struct MinorWitness {
  GroundSubset deleted;
  GroundSubset contracted;
  std::vector<int> iso;
};

// Exhaustive search over disjoint (deleted, contracted) pairs, contracted
// sets in increasing size first. The first witness in that order is returned.
std::optional<MinorWitness> has_minor(const Matroid& host, const Matroid& target);

// Applies the witness and checks that it reproduces the target's bases.
bool witness_reproduces(const Matroid& host, const Matroid& target, const MinorWitness& w);

// No pair of bases with Δ = 3.
bool is_binary(const Matroid& m);

// Some pair with |B1 \ B2| in {3, 4} has Δ = 10.
bool has_u36_minor(const Matroid& m);

// Some pair has Δ = C(2d-1, d). Necessary for a U(d, 2d) minor.
bool uniform_minor_necessary(const Matroid& m, int d);

// Lists every minor of the requested size and rank obtained by removing
// elements, and counts the connected ones. When none is connected the host
// has no connected minor of that shape, in particular no uniform one.
struct ConnectedMinorCertificate {
  std::uint64_t candidates = 0;
  std::uint64_t matching_rank = 0;
  std::uint64_t connected = 0;
  std::uint64_t matching_base_count = 0;  // candidates with C(n', r') bases

  bool excludes_connected_minor() const noexcept { return connected == 0; }
};

ConnectedMinorCertificate certify_connected_minors(const Matroid& m, int target_n,
                                                   int target_r);

// Rank-6 matroid on 12 elements: the direct sum of a rank-3 matroid on 6
// elements with 14 bases-cobases and one with 18.
struct D5Counterexample {
  Matroid matroid;
  Matroid part14;
  Matroid part18;
  std::uint64_t bases_cobases = 0;
  Mask base = 0;        // a base-cobase
  Mask complement = 0;  // its complement
  std::size_t delta = 0;
  ConnectedMinorCertificate certificate;
};

D5Counterexample build_d5_counterexample();

}  // namespace mtoric

#endif  // MTORIC_MINORS_HPP_
