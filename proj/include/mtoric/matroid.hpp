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

#ifndef MTORIC_MATROID_HPP_
#define MTORIC_MATROID_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mtoric/bits.hpp"
#include "mtoric/error.hpp"

namespace mtoric {

// A subset of the ground set {1..n}.
struct GroundSubset {
  Mask mask = 0;

  static GroundSubset of(std::initializer_list<int> elements) {
    return GroundSubset{mask_of(elements)};
  }
  std::vector<int> elements() const { return to_elements(mask); }
  int size() const noexcept { return popcount(mask); }

  friend bool operator==(const GroundSubset&, const GroundSubset&) = default;
};

// Witness of a failed exchange: no f in second \ first repairs first - e.
struct ExchangeViolation {
  Mask first = 0;
  Mask second = 0;
  int element = 0;  // 1-based
};

class ExchangeAxiomError : public MatroidError {
 public:
  explicit ExchangeAxiomError(const ExchangeViolation& v);
  const ExchangeViolation& violation() const noexcept { return violation_; }

 private:
  ExchangeViolation violation_;
};

// A matroid given by its bases. Immutable after construction; bases are kept
// sorted by mask value, which is the canonical base order used everywhere.
class Matroid {
 public:
  // Validates equicardinality and the exchange axiom.
  static Matroid from_bases(int n, int r, std::vector<Mask> bases);
  // Bases as lists of 1-based elements.
  static Matroid from_bases(int n, int r,
                            const std::vector<std::vector<int>>& bases);
  // No exchange check. For families already known to be matroids.
  static Matroid from_trusted_bases(int n, int r, std::vector<Mask> bases);

  int size() const noexcept { return n_; }
  int rank() const noexcept { return r_; }
  Mask ground() const noexcept { return low_mask(n_); }
  std::span<const Mask> bases() const noexcept { return bases_; }
  std::size_t num_bases() const noexcept { return bases_.size(); }

  bool is_base(Mask m) const noexcept;
  std::optional<std::size_t> index_of(Mask m) const noexcept;
  // Rank of an arbitrary subset: max |S ∩ B| over bases B.
  int rank_of(Mask subset) const noexcept;

  friend bool operator==(const Matroid& a, const Matroid& b) noexcept {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, int r, std::vector<Mask> bases);

  int n_ = 0;
  int r_ = 0;
  std::vector<Mask> bases_;
  // Membership bitmap over all 2^n subsets, kept for small ground sets.
  std::vector<std::uint64_t> dense_;
};

inline constexpr int kDenseLookupLimit = 16;

struct ExchangeReport {
  bool holds = true;
  std::optional<ExchangeViolation> violation;
};

// Plain exchange axiom; first violation in canonical (B1, B2, e) order.
ExchangeReport check_exchange_axiom(const Matroid& m);

// Symmetric exchange. A violation would mean an internal inconsistency.
ExchangeReport verify_symmetric_exchange(const Matroid& m);

struct MultipleExchangeViolation {
  Mask first = 0;
  Mask second = 0;
  Mask removed = 0;  // the subset A1 of first with no partner A2
};

struct MultipleExchangeReport {
  bool holds = true;
  std::optional<MultipleExchangeViolation> violation;
};

MultipleExchangeReport verify_multiple_symmetric_exchange(const Matroid& m);

Matroid uniform(int r, int n);

// Transversal matroid of a set presentation on {1..n}; bases are the
// maximum partial transversals.
Matroid transversal(int n, const std::vector<std::vector<int>>& sets);

Matroid dual(const Matroid& m);

// A minor together with its order-preserving renumbering:
// original[i] is the 1-based parent label of element i+1.
struct MinorResult {
  Matroid matroid;
  std::vector<int> original;
};

MinorResult deletion(const Matroid& m, GroundSubset removed);
MinorResult contraction(const Matroid& m, GroundSubset contracted);
MinorResult restriction(const Matroid& m, GroundSubset kept);
// (M \ deleted) / contracted, renumbered once. The two sets must be disjoint.
MinorResult minor(const Matroid& m, GroundSubset deleted,
                  GroundSubset contracted);

GroundSubset loops(const Matroid& m);
GroundSubset coloops(const Matroid& m);

struct Simplification {
  Matroid matroid;
  GroundSubset removed_loops;
  GroundSubset removed_coloops;
  std::vector<int> original;
};

// Deletes loops and contracts coloops.
Simplification simplify_loops_coloops(const Matroid& m);

struct Components {
  int count = 0;
  std::vector<GroundSubset> parts;  // ordered by least element
};

// Loops and coloops are singleton components.
Components connected_components(const Matroid& m);

// Elements of b are shifted by a.size().
Matroid direct_sum(const Matroid& a, const Matroid& b);

std::uint64_t bases_cobases(const Matroid& m);

struct BasisGraph {
  // Vertices are base indices in canonical order.
  std::vector<std::vector<std::uint32_t>> adjacency;
};

BasisGraph basis_graph(const Matroid& m);
int basis_graph_diameter(const Matroid& m);

struct OrderingWitness {
  Mask first = 0;
  Mask second = 0;
  std::vector<std::pair<int, int>> map;  // 1-based, first -> second
};

struct SboReport {
  bool holds = true;
  std::vector<OrderingWitness> witnesses;  // one per unordered pair
  std::optional<std::pair<Mask, Mask>> failing_pair;
};

inline constexpr int kSboRankLimit = 8;

SboReport strongly_base_orderable(const Matroid& m);

}  // namespace mtoric

#endif  // MTORIC_MATROID_HPP_
