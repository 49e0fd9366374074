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

#ifndef MTORIC_CANONICAL_HPP_
#define MTORIC_CANONICAL_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mtoric/matroid.hpp"

namespace mtoric {

inline constexpr int kCanonicalLimit = 10;

// Minimal image of a matroid under relabeling. The signature is the
// '0'/'1' string over all r-subsets in colex order (numeric mask order);
// it is the least such string over all permutations of the ground set.
struct CanonicalForm {
  int n = 0;
  int r = 0;
  std::string signature;
  // permutation[i] is the original 1-based element placed at position i+1.
  std::vector<int> permutation;
};

CanonicalForm canonical_form(const Matroid& m);

bool is_isomorphic(const Matroid& a, const Matroid& b);

// A bijection iso with iso[e-1] = image in b of element e of a, if any.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);

// Applies new_label[e-1] = new label of element e.
Matroid relabel(const Matroid& m, std::span<const int> new_label);

// The representative whose colex bitstring equals the signature.
Matroid canonical_representative(const Matroid& m, const CanonicalForm& form);

}  // namespace mtoric

#endif  // MTORIC_CANONICAL_HPP_
