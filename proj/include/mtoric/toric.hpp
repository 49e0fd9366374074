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

#ifndef MTORIC_TORIC_HPP_
#define MTORIC_TORIC_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mtoric/fibers.hpp"
#include "mtoric/matroid.hpp"

namespace mtoric {

using BigInt = boost::multiprecision::cpp_int;

// A monomial in the base variables: sorted base indices (canonical order),
// repeated for higher powers.
using Monomial = std::vector<std::uint32_t>;

// plus - minus with equal multidegree; plus is the lexicographically
// smaller monomial, so a binomial and its negative are the same object.
struct Binomial {
  Monomial plus;
  Monomial minus;

  std::size_t degree() const noexcept { return plus.size(); }
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

struct FiberSummary {
  DegreeVector degree;
  std::size_t size = 0;
  std::size_t components = 0;
};

inline constexpr std::uint64_t kDefaultFiberCap = 5'000'000;
inline constexpr int kDefaultDegreeBound = 4;

struct GeneratorReport {
  int degree_bound = 0;
  std::vector<Mask> bases;  // resolves the indices inside monomials
  std::vector<Binomial> generators;  // by degree, then fiber, then component
  std::uint64_t mu_truncated = 0;
  // Fibers with at least two monomials.
  std::vector<FiberSummary> fibers;
  bool quadratic_layer_complete = false;
};

// Builds a minimal binomial generating set degree by degree. In each fiber
// the moves of lower degree connect monomials u = w·m⁺ and v = w·m⁻; every
// remaining component is joined to the component of the least monomial.
class MarkovBasisBuilder {
 public:
  explicit MarkovBasisBuilder(const Matroid& m, std::uint64_t fiber_cap = kDefaultFiberCap);

  // Processes the next degree (2 on the first call).
  void advance();
  int degree_done() const noexcept { return report_.degree_bound; }
  const GeneratorReport& report() const noexcept { return report_; }
  GeneratorReport take_report() { return std::move(report_); }

 private:
  const Matroid& m_;
  std::uint64_t cap_;
  std::uint64_t monomials_seen_ = 0;
  GeneratorReport report_;
};

// Throws FiberCapExceeded when the degree <= D monomials exceed the cap.
GeneratorReport markov_basis(const Matroid& m, int degree_bound,
                             std::uint64_t fiber_cap = kDefaultFiberCap);

// |B| - (n - c + 1).
std::int64_t height(const Matroid& m);

// (b^2 - b - 2s) / 2 with s the number of pair classes.
std::int64_t mu_formula(const Matroid& m);

// Product over pair classes of Δ^(Δ-2).
BigInt nu_quadratic(const Matroid& m);

// 1 + number of quadratic generators in the fiber of b1 ∪ b2.
std::size_t delta_from_generators(const GeneratorReport& report, Mask b1, Mask b2);

struct QuadraticVerdict {
  bool quadratic = true;  // no generator of degree 3..degree_bound
  int degree_bound = 0;
  std::optional<Binomial> witness;
};

QuadraticVerdict is_quadratically_generated(const Matroid& m, int degree_bound,
                                            std::uint64_t fiber_cap = kDefaultFiberCap);

struct CiVerdict {
  enum class Kind {
    kZeroIdeal,     // rank outside [2, n-2] after removing loops and coloops
    kUpToDegree,    // μ(≤D) = ht
    kNotCi,         // μ(≤D) > ht, certified
    kInconclusive,  // μ(≤D) < ht: generators beyond D are missing
  };
  Kind kind = Kind::kZeroIdeal;
  int degree_bound = 0;  // degree at which the verdict was reached
  std::uint64_t mu_truncated = 0;
  std::int64_t height = 0;

  bool complete_intersection() const noexcept {
    return kind == Kind::kZeroIdeal || kind == Kind::kUpToDegree;
  }
};

// Loops and coloops are removed first; they do not change the ideal.
CiVerdict is_complete_intersection(const Matroid& m, int degree_bound = kDefaultDegreeBound,
                                   std::uint64_t fiber_cap = kDefaultFiberCap);

struct UniquenessVerdict {
  enum class Kind { kUnique, kNotUnique, kTriviallyUnique };
  Kind kind = Kind::kTriviallyUnique;
  bool binary = true;
  int diameter = 0;

  bool unique() const noexcept { return kind != Kind::kNotUnique; }
};

// For rank >= 2: binary and basis-graph diameter at most 2. Rank <= 1 has
// the zero ideal and reports kTriviallyUnique.
UniquenessVerdict unique_generating_set(const Matroid& m);

struct SimpleGraph {
  int vertices = 0;
  std::vector<Mask> adjacency;  // bit j of adjacency[i]: edge {i+1, j+1}
};

// Vertices {1..n}, one edge per base of a rank-2 matroid.
SimpleGraph rank2_graph(const Matroid& m);
bool contains_k23(const SimpleGraph& g);

}  // namespace mtoric

#endif  // MTORIC_TORIC_HPP_
