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

#ifndef MTORIC_ATLAS_HPP_
#define MTORIC_ATLAS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mtoric/canonical.hpp"
#include "mtoric/matroid.hpp"

namespace mtoric {

enum class Regime {
  kAuto,       // augmented
  kNaive,      // every family of r-subsets, n <= 6
  kAugmented,  // single-element extensions of canonical parents, n <= 8
};

inline constexpr int kNaiveLimit = 6;
inline constexpr int kAugmentedLimit = 8;

struct EnumerateOptions {
  Regime regime = Regime::kAuto;
  unsigned threads = 0;    // 0: hardware concurrency
  std::string cache_path;  // optional persisted class list for (n, r)
  bool memoize = true;     // reuse and fill the per-process result table
};

// One canonical representative per isomorphism class of rank-r matroids
// on n elements, ordered by canonical signature.
std::vector<Matroid> enumerate(int n, int r, const EnumerateOptions& options = {});

// Canonical matroids with exactly k bases-cobases.
std::vector<Matroid> search_bases_cobases(int n, int r, std::uint64_t k,
                                          const EnumerateOptions& options = {});

// All single-element extensions of m by a new element n+1 that is not a
// coloop (the loop included), one per linear subclass of hyperplanes.
std::vector<Matroid> single_element_extensions(const Matroid& m);

// Number of linear subclasses of the hyperplanes of m (rank >= 1).
std::uint64_t count_linear_subclasses(const Matroid& m);

// Reads/writes the class cache: one "n r <lex bitstring>" line per matroid.
std::vector<Matroid> load_class_cache(const std::string& path, int n, int r);
void append_class_cache(const std::string& path, const std::vector<Matroid>& classes);

}  // namespace mtoric

#endif  // MTORIC_ATLAS_HPP_
