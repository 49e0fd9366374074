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

#include "mtoric/matroid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <string>

namespace mtoric {
namespace {

constexpr std::uint64_t kMaxBaseCount = 20'000'000;

std::string describe(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : to_elements(m)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

void check_shape(int n, int r) {
  if (n < 0) {
    throw MatroidError(ErrorCode::kInvalidGroundSet,
                       "ground set size must be non-negative");
  }
  if (n > kMaxGroundSet) {
    throw MatroidError(ErrorCode::kGroundSetTooLarge,
                       "ground set size " + std::to_string(n) +
                           " exceeds the 64-element limit");
  }
  if (r < 0 || r > n) {
    throw MatroidError(ErrorCode::kRankOutOfRange,
                       "rank " + std::to_string(r) + " outside [0, " +
                           std::to_string(n) + "]");
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Bases of (M \ deleted) / contracted expressed on the surviving positions.
std::vector<Mask> minor_bases(const Matroid& m, Mask deleted,
                              Mask contracted) {
  const Mask keep = m.ground() & ~(deleted | contracted);
  int best_deleted = -1;
  for (Mask b : m.bases()) best_deleted = std::max(best_deleted, popcount(b & ~deleted));
  std::vector<Mask> after_delete;
  for (Mask b : m.bases()) {
    if (popcount(b & ~deleted) == best_deleted) after_delete.push_back(b & ~deleted);
  }
  int best_contracted = -1;
  for (Mask b : after_delete) {
    best_contracted = std::max(best_contracted, popcount(b & contracted));
  }
  std::vector<Mask> out;
  for (Mask b : after_delete) {
    if (popcount(b & contracted) == best_contracted) {
      out.push_back(compress(b & keep, keep));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> surviving_labels(Mask keep) { return to_elements(keep); }

// Kuhn augmenting path: can `elem` be matched given the current assignment?
bool augment(int elem, const std::vector<Mask>& sets, std::vector<int>& owner,
             Mask& visited) {
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (!(sets[s] & bit(elem)) || (visited & bit(static_cast<int>(s)))) continue;
    visited |= bit(static_cast<int>(s));
    if (owner[s] < 0 || augment(owner[s], sets, owner, visited)) {
      owner[s] = elem;
      return true;
    }
  }
  return false;
}

bool is_partial_transversal(Mask elems, const std::vector<Mask>& sets) {
  std::vector<int> owner(sets.size(), -1);
  bool ok = true;
  for_each_bit(elems, [&](int e) {
    if (!ok) return;
    Mask visited = 0;
    ok = augment(e, sets, owner, visited);
  });
  return ok;
}

}  // namespace

ExchangeAxiomError::ExchangeAxiomError(const ExchangeViolation& v)
    : MatroidError(ErrorCode::kExchangeAxiomViolated,
                   "exchange axiom fails for B1=" + describe(v.first) +
                       ", B2=" + describe(v.second) +
                       ", e=" + std::to_string(v.element)),
      violation_(v) {}

Matroid::Matroid(int n, int r, std::vector<Mask> bases)
    : n_(n), r_(r), bases_(std::move(bases)) {
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  if (n_ <= kDenseLookupLimit) {
    dense_.assign(((std::size_t{1} << n_) + 63) / 64, 0);
    for (Mask b : bases_) dense_[b >> 6] |= std::uint64_t{1} << (b & 63);
  }
}

Matroid Matroid::from_bases(int n, int r, std::vector<Mask> bases) {
  check_shape(n, r);
  if (bases.empty()) {
    throw MatroidError(ErrorCode::kInvalidArgument, "a matroid needs at least one base");
  }
  for (Mask b : bases) {
    if (b & ~low_mask(n)) {
      throw MatroidError(ErrorCode::kInvalidSubset,
                         "base " + describe(b) + " is not inside {1.." +
                             std::to_string(n) + "}");
    }
    if (popcount(b) != r) {
      throw MatroidError(ErrorCode::kNotEquicardinal,
                         "base " + describe(b) + " does not have " +
                             std::to_string(r) + " elements");
    }
  }
  Matroid m(n, r, std::move(bases));
  const ExchangeReport report = check_exchange_axiom(m);
  if (!report.holds) throw ExchangeAxiomError(*report.violation);
  return m;
}

Matroid Matroid::from_bases(int n, int r,
                            const std::vector<std::vector<int>>& bases) {
  std::vector<Mask> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) {
    for (int e : b) {
      if (e < 1 || e > n) {
        throw MatroidError(ErrorCode::kInvalidSubset,
                           "element " + std::to_string(e) + " not in {1.." +
                               std::to_string(n) + "}");
      }
    }
    const Mask m = mask_of(b);
    if (popcount(m) != static_cast<int>(b.size())) {
      throw MatroidError(ErrorCode::kNotEquicardinal, "repeated element in a base");
    }
    masks.push_back(m);
  }
  return from_bases(n, r, std::move(masks));
}

Matroid Matroid::from_trusted_bases(int n, int r, std::vector<Mask> bases) {
  return Matroid(n, r, std::move(bases));
}

bool Matroid::is_base(Mask m) const noexcept {
  if (!dense_.empty()) {
    if (m >> n_) return false;
    return (dense_[m >> 6] >> (m & 63)) & 1;
  }
  return std::binary_search(bases_.begin(), bases_.end(), m);
}

std::optional<std::size_t> Matroid::index_of(Mask m) const noexcept {
  const auto it = std::lower_bound(bases_.begin(), bases_.end(), m);
  if (it == bases_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - bases_.begin());
}

int Matroid::rank_of(Mask subset) const noexcept {
  int best = 0;
  for (Mask b : bases_) {
    best = std::max(best, popcount(b & subset));
    if (best == r_) break;
  }
  return best;
}

ExchangeReport check_exchange_axiom(const Matroid& m) {
  const auto bases = m.bases();
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      if (b1 == b2) continue;
      const Mask only2 = b2 & ~b1;
      Mask only1 = b1 & ~b2;
      while (only1 != 0) {
        const int e = std::countr_zero(only1);
        only1 &= only1 - 1;
        const Mask base_minus = b1 & ~bit(e);
        bool repaired = false;
        for_each_bit(only2, [&](int f) {
          if (!repaired && m.is_base(base_minus | bit(f))) repaired = true;
        });
        if (!repaired) return {false, ExchangeViolation{b1, b2, e + 1}};
      }
    }
  }
  return {};
}

ExchangeReport verify_symmetric_exchange(const Matroid& m) {
  const auto bases = m.bases();
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      if (b1 == b2) continue;
      const Mask only2 = b2 & ~b1;
      Mask only1 = b1 & ~b2;
      while (only1 != 0) {
        const int e = std::countr_zero(only1);
        only1 &= only1 - 1;
        bool found = false;
        for_each_bit(only2, [&](int f) {
          if (found) return;
          found = m.is_base((b1 & ~bit(e)) | bit(f)) &&
                  m.is_base((b2 & ~bit(f)) | bit(e));
        });
        if (!found) return {false, ExchangeViolation{b1, b2, e + 1}};
      }
    }
  }
  return {};
}

MultipleExchangeReport verify_multiple_symmetric_exchange(const Matroid& m) {
  const auto bases = m.bases();
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      bool all_ok = true;
      Mask failing = 0;
      for_each_submask(b1, [&](Mask a1) {
        if (!all_ok) return;
        bool found = false;
        for_each_submask(b2, [&](Mask a2) {
          if (found) return;
          found = m.is_base((b1 & ~a1) | a2) && m.is_base((b2 & ~a2) | a1);
        });
        if (!found) {
          all_ok = false;
          failing = a1;
        }
      });
      if (!all_ok) return {false, MultipleExchangeViolation{b1, b2, failing}};
    }
  }
  return {};
}

Matroid uniform(int r, int n) {
  check_shape(n, r);
  if (binomial(n, r) > kMaxBaseCount) {
    throw MatroidError(ErrorCode::kBudgetExceeded, "too many bases for U(" +
                                                       std::to_string(r) + "," +
                                                       std::to_string(n) + ")");
  }
  std::vector<Mask> bases;
  bases.reserve(binomial(n, r));
  for_each_k_subset(n, r, [&](Mask s) { bases.push_back(s); });
  return Matroid::from_trusted_bases(n, r, std::move(bases));
}

Matroid transversal(int n, const std::vector<std::vector<int>>& sets) {
  check_shape(n, 0);
  if (sets.empty()) {
    throw MatroidError(ErrorCode::kEmptyPresentation, "presentation has no sets");
  }
  if (sets.size() > 64) {
    throw MatroidError(ErrorCode::kInvalidArgument, "at most 64 sets supported");
  }
  std::vector<Mask> masks;
  Mask covered = 0;
  for (const auto& s : sets) {
    for (int e : s) {
      if (e < 1 || e > n) {
        throw MatroidError(ErrorCode::kInvalidSubset,
                           "element " + std::to_string(e) + " not in {1.." +
                               std::to_string(n) + "}");
      }
    }
    masks.push_back(mask_of(s));
    covered |= masks.back();
  }
  const int top = std::min<int>(static_cast<int>(sets.size()), popcount(covered));
  const int u = popcount(covered);
  for (int k = top; k >= 0; --k) {
    std::vector<Mask> bases;
    for_each_k_subset(u, k, [&](Mask local) {
      const Mask s = expand(local, covered);
      if (is_partial_transversal(s, masks)) bases.push_back(s);
    });
    if (!bases.empty()) return Matroid::from_trusted_bases(n, k, std::move(bases));
  }
  return Matroid::from_trusted_bases(n, 0, {0});
}

Matroid dual(const Matroid& m) {
  std::vector<Mask> bases;
  bases.reserve(m.num_bases());
  for (Mask b : m.bases()) bases.push_back(m.ground() & ~b);
  return Matroid::from_trusted_bases(m.size(), m.size() - m.rank(), std::move(bases));
}

MinorResult minor(const Matroid& m, GroundSubset deleted, GroundSubset contracted) {
  if ((deleted.mask | contracted.mask) & ~m.ground()) {
    throw MatroidError(ErrorCode::kInvalidSubset, "minor sets exceed the ground set");
  }
  if (deleted.mask & contracted.mask) {
    throw MatroidError(ErrorCode::kInvalidSubset,
                       "deletion and contraction sets must be disjoint");
  }
  const Mask keep = m.ground() & ~(deleted.mask | contracted.mask);
  std::vector<Mask> bases = minor_bases(m, deleted.mask, contracted.mask);
  const int rank = popcount(bases.front());
  return {Matroid::from_trusted_bases(popcount(keep), rank, std::move(bases)),
          surviving_labels(keep)};
}

namespace {
void check_proper(const Matroid& m, GroundSubset a) {
  if (a.mask & ~m.ground()) {
    throw MatroidError(ErrorCode::kInvalidSubset, "subset is not inside the ground set");
  }
  if (m.size() > 0 && a.mask == m.ground()) {
    throw MatroidError(ErrorCode::kInvalidSubset, "subset is the whole ground set");
  }
}
}  // namespace

MinorResult deletion(const Matroid& m, GroundSubset removed) {
  check_proper(m, removed);
  return minor(m, removed, GroundSubset{});
}

MinorResult contraction(const Matroid& m, GroundSubset contracted) {
  check_proper(m, contracted);
  return minor(m, GroundSubset{}, contracted);
}

MinorResult restriction(const Matroid& m, GroundSubset kept) {
  if (kept.mask & ~m.ground()) {
    throw MatroidError(ErrorCode::kInvalidSubset, "subset is not inside the ground set");
  }
  if (kept.mask == 0 && m.size() > 0) {
    throw MatroidError(ErrorCode::kInvalidSubset, "restriction to the empty set");
  }
  return minor(m, GroundSubset{m.ground() & ~kept.mask}, GroundSubset{});
}

GroundSubset loops(const Matroid& m) {
  Mask used = 0;
  for (Mask b : m.bases()) used |= b;
  return {m.ground() & ~used};
}

GroundSubset coloops(const Matroid& m) {
  Mask common = m.ground();
  for (Mask b : m.bases()) common &= b;
  return {common};
}

Simplification simplify_loops_coloops(const Matroid& m) {
  const GroundSubset l = loops(m);
  const GroundSubset c = coloops(m);
  MinorResult reduced = minor(m, l, c);
  return {std::move(reduced.matroid), l, c, std::move(reduced.original)};
}

Components connected_components(const Matroid& m) {
  const int n = m.size();
  UnionFind uf(n);
  // Components of the fundamental graph of any one base are the components
  // of the matroid.
  const Mask b = m.bases().front();
  for_each_bit(m.ground() & ~b, [&](int f) {
    for_each_bit(b, [&](int e) {
      if (m.is_base((b & ~bit(e)) | bit(f))) uf.unite(e, f);
    });
  });
  std::vector<Mask> by_root(n, 0);
  for (int e = 0; e < n; ++e) by_root[uf.find(e)] |= bit(e);
  Components out;
  for (int e = 0; e < n; ++e) {
    if (by_root[e] != 0) out.parts.push_back(GroundSubset{by_root[e]});
  }
  out.count = static_cast<int>(out.parts.size());
  return out;
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  if (n > kMaxGroundSet) {
    throw MatroidError(ErrorCode::kGroundSetTooLarge,
                       "direct sum would have " + std::to_string(n) + " elements");
  }
  if (static_cast<double>(a.num_bases()) * static_cast<double>(b.num_bases()) >
      static_cast<double>(kMaxBaseCount)) {
    throw MatroidError(ErrorCode::kBudgetExceeded, "direct sum has too many bases");
  }
  std::vector<Mask> bases;
  bases.reserve(a.num_bases() * b.num_bases());
  for (Mask x : a.bases()) {
    for (Mask y : b.bases()) bases.push_back(x | (y << a.size()));
  }
  return Matroid::from_trusted_bases(n, a.rank() + b.rank(), std::move(bases));
}

std::uint64_t bases_cobases(const Matroid& m) {
  if (2 * m.rank() != m.size()) return 0;
  std::uint64_t count = 0;
  for (Mask b : m.bases()) count += m.is_base(m.ground() & ~b) ? 1 : 0;
  return count;
}

BasisGraph basis_graph(const Matroid& m) {
  BasisGraph g;
  g.adjacency.resize(m.num_bases());
  const auto bases = m.bases();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const Mask b = bases[i];
    for_each_bit(b, [&](int e) {
      for_each_bit(m.ground() & ~b, [&](int f) {
        if (auto j = m.index_of((b & ~bit(e)) | bit(f))) {
          g.adjacency[i].push_back(static_cast<std::uint32_t>(*j));
        }
      });
    });
    std::sort(g.adjacency[i].begin(), g.adjacency[i].end());
  }
  return g;
}

int basis_graph_diameter(const Matroid& m) {
  const BasisGraph g = basis_graph(m);
  const std::size_t b = g.adjacency.size();
  int diameter = 0;
  std::vector<int> dist(b);
  std::deque<std::uint32_t> queue;
  for (std::size_t s = 0; s < b; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.assign(1, static_cast<std::uint32_t>(s));
    while (!queue.empty()) {
      const std::uint32_t v = queue.front();
      queue.pop_front();
      for (std::uint32_t w : g.adjacency[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          diameter = std::max(diameter, dist[w]);
          queue.push_back(w);
        }
      }
    }
  }
  return diameter;
}

namespace {

// Extends a partial bijection from the exchanged part of `first` onto the
// exchanged part of `second`; elements of the intersection map to themselves.
class OrderingSearch {
 public:
  OrderingSearch(const Matroid& m, Mask first, Mask second)
      : m_(m), first_(first) {
    for_each_bit(first & ~second, [&](int e) { from_.push_back(e); });
    for_each_bit(second & ~first, [&](int f) { to_.push_back(f); });
    image_.assign(from_.size(), -1);
  }

  bool run() { return place(0, 0); }

  std::vector<std::pair<int, int>> map() const {
    std::vector<std::pair<int, int>> out;
    for_each_bit(first_, [&](int e) {
      int target = e;
      for (std::size_t k = 0; k < from_.size(); ++k) {
        if (from_[k] == e) target = image_[k];
      }
      out.emplace_back(e + 1, target + 1);
    });
    return out;
  }

 private:
  bool place(std::size_t k, Mask used) {
    if (k == from_.size()) return true;
    for (std::size_t j = 0; j < to_.size(); ++j) {
      if (used & bit(static_cast<int>(j))) continue;
      image_[k] = to_[j];
      if (consistent(k) && place(k + 1, used | bit(static_cast<int>(j)))) {
        return true;
      }
    }
    image_[k] = -1;
    return false;
  }

  // Every C ⊆ {from_[0..k]} containing from_[k] must give a base.
  bool consistent(std::size_t k) const {
    const Mask earlier = low_mask(static_cast<int>(k));
    bool ok = true;
    for_each_submask(earlier, [&](Mask sel) {
      if (!ok) return;
      Mask swapped = first_ & ~bit(from_[k]);
      swapped |= bit(image_[k]);
      for_each_bit(sel, [&](int idx) {
        swapped = (swapped & ~bit(from_[idx])) | bit(image_[idx]);
      });
      ok = m_.is_base(swapped);
    });
    return ok;
  }

  const Matroid& m_;
  Mask first_;
  std::vector<int> from_;
  std::vector<int> to_;
  std::vector<int> image_;
};

}  // namespace

SboReport strongly_base_orderable(const Matroid& m) {
  if (m.rank() > kSboRankLimit) {
    throw MatroidError(ErrorCode::kRankTooLargeForExhaustiveSearch,
                       "strong base orderability search needs rank <= " +
                           std::to_string(kSboRankLimit));
  }
  SboReport report;
  const auto bases = m.bases();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      OrderingSearch search(m, bases[i], bases[j]);
      if (!search.run()) {
        report.holds = false;
        report.witnesses.clear();
        report.failing_pair = std::make_pair(bases[i], bases[j]);
        return report;
      }
      report.witnesses.push_back({bases[i], bases[j], search.map()});
    }
  }
  return report;
}

}  // namespace mtoric
