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

#include "mtoric/toric.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "mtoric/minors.hpp"

namespace mtoric {
namespace {

// Multidegree packed as one 4-bit counter per element (degrees up to 15).
using PackedDegree = std::array<std::uint64_t, 4>;
constexpr int kMaxPackedDegree = 15;

PackedDegree spread(Mask b) {
  PackedDegree out{};
  for_each_bit(b, [&](int e) { out[e / 16] += std::uint64_t{1} << (4 * (e % 16)); });
  return out;
}

DegreeVector unpack(const PackedDegree& key, int n) {
  DegreeVector d;
  d.counts.resize(n);
  for (int e = 0; e < n; ++e) d.counts[e] = (key[e / 16] >> (4 * (e % 16))) & 0xF;
  return d;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : m) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Calls f(sub, rest) for every size-k sub-multiset of the sorted monomial u.
template <class F>
void for_each_submultiset(const Monomial& u, std::size_t k, F&& f) {
  const std::size_t d = u.size();
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  Monomial sub(k);
  Monomial rest;
  rest.reserve(d - k);
  while (true) {
    // Skip position choices that repeat an earlier identical sub-multiset.
    bool canonical = true;
    for (std::size_t i = 0; i < k && canonical; ++i) {
      const std::size_t p = pick[i];
      if (p > 0 && u[p - 1] == u[p] && (i == 0 || pick[i - 1] != p - 1)) canonical = false;
    }
    if (canonical) {
      rest.clear();
      std::size_t j = 0;
      for (std::size_t p = 0; p < d; ++p) {
        if (j < k && pick[j] == p) {
          sub[j++] = u[p];
        } else {
          rest.push_back(u[p]);
        }
      }
      f(sub, rest);
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == d - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::uint64_t multiset_count(std::size_t b, int d) {
  return binomial(static_cast<int>(b) + d - 1, d);
}

struct MarkovMoves {
  std::unordered_map<Monomial, std::vector<Monomial>, MonomialHash> partners;
  std::vector<std::size_t> degrees;
};

}  // namespace

MarkovBasisBuilder::MarkovBasisBuilder(const Matroid& m, std::uint64_t fiber_cap)
    : m_(m), cap_(fiber_cap) {
  report_.bases.assign(m.bases().begin(), m.bases().end());
}

void MarkovBasisBuilder::advance() {
  const int d = report_.degree_bound == 0 ? 2 : report_.degree_bound + 1;
  if (d > kMaxPackedDegree) {
    throw MatroidError(ErrorCode::kInvalidArgument, "degree bound above 15 is not supported");
  }
  const std::size_t b = report_.bases.size();
  const std::uint64_t count = multiset_count(b, d);
  if (count > cap_ || monomials_seen_ + count > cap_) {
    throw MatroidError(ErrorCode::kFiberCapExceeded,
                       "degree " + std::to_string(d) + " needs " + std::to_string(count) +
                           " monomials; cap is " + std::to_string(cap_));
  }
  monomials_seen_ += count;

  std::vector<PackedDegree> base_degree(b);
  for (std::size_t i = 0; i < b; ++i) base_degree[i] = spread(report_.bases[i]);

  // All degree-d monomials in lexicographic order, flattened.
  std::vector<std::uint32_t> flat;
  flat.reserve(count * d);
  std::vector<PackedDegree> keys;
  keys.reserve(count);
  {
    std::vector<std::uint32_t> cur(d, 0);
    while (true) {
      PackedDegree key{};
      for (auto x : cur) {
        for (int w = 0; w < 4; ++w) key[w] += base_degree[x][w];
      }
      keys.push_back(key);
      flat.insert(flat.end(), cur.begin(), cur.end());
      int i = d - 1;
      while (i >= 0 && cur[i] == b - 1) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < d; ++j) cur[j] = cur[i];
    }
  }
  std::vector<std::uint32_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t c) { return keys[a] < keys[c]; });

  auto monomial_at = [&](std::uint32_t idx) {
    return Monomial(flat.begin() + static_cast<std::ptrdiff_t>(idx) * d,
                    flat.begin() + static_cast<std::ptrdiff_t>(idx + 1) * d);
  };

  // Moves of every lower degree, indexed by either side.
  MarkovMoves moves;
  for (const Binomial& g : report_.generators) {
    moves.partners[g.plus].push_back(g.minus);
    moves.partners[g.minus].push_back(g.plus);
    if (std::find(moves.degrees.begin(), moves.degrees.end(), g.degree()) == moves.degrees.end()) {
      moves.degrees.push_back(g.degree());
    }
  }

  std::vector<Binomial> added;
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && keys[order[end]] == keys[order[start]]) ++end;
    const std::size_t size = end - start;
    if (size >= 2) {
      std::vector<Monomial> vertices;
      vertices.reserve(size);
      for (std::size_t i = start; i < end; ++i) vertices.push_back(monomial_at(order[i]));
      UnionFind uf(size);
      Monomial v;
      for (std::size_t ui = 0; ui < size; ++ui) {
        for (std::size_t k : moves.degrees) {
          for_each_submultiset(vertices[ui], k, [&](const Monomial& sub, const Monomial& rest) {
            auto it = moves.partners.find(sub);
            if (it == moves.partners.end()) return;
            for (const Monomial& other : it->second) {
              v.clear();
              std::merge(rest.begin(), rest.end(), other.begin(), other.end(),
                         std::back_inserter(v));
              auto pos = std::lower_bound(vertices.begin(), vertices.end(), v);
              if (pos != vertices.end() && *pos == v) {
                uf.unite(ui, static_cast<std::size_t>(pos - vertices.begin()));
              }
            }
          });
        }
      }
      std::size_t components = 0;
      for (std::size_t i = 0; i < size; ++i) {
        if (uf.find(i) != i) continue;
        ++components;
        if (i != 0) added.push_back(Binomial{vertices[0], vertices[i]});
      }
      report_.fibers.push_back({unpack(keys[order[start]], m_.size()), size, components});
      report_.mu_truncated += components - 1;
    }
    start = end;
  }
  report_.generators.insert(report_.generators.end(), added.begin(), added.end());
  report_.degree_bound = d;
  if (d == 2) report_.quadratic_layer_complete = true;
}

GeneratorReport markov_basis(const Matroid& m, int degree_bound, std::uint64_t fiber_cap) {
  if (degree_bound < 2) {
    throw MatroidError(ErrorCode::kInvalidArgument, "degree bound must be at least 2");
  }
  std::uint64_t total = 0;
  for (int d = 2; d <= degree_bound; ++d) {
    total += multiset_count(m.num_bases(), d);
    if (total > fiber_cap) {
      throw MatroidError(ErrorCode::kFiberCapExceeded,
                         "degree <= " + std::to_string(degree_bound) + " needs more than " +
                             std::to_string(fiber_cap) + " monomials");
    }
  }
  MarkovBasisBuilder builder(m, fiber_cap);
  while (builder.degree_done() < degree_bound) builder.advance();
  return builder.take_report();
}

std::int64_t height(const Matroid& m) {
  const auto c = connected_components(m).count;
  return static_cast<std::int64_t>(m.num_bases()) - (m.size() - c + 1);
}

std::int64_t mu_formula(const Matroid& m) {
  const auto b = static_cast<std::int64_t>(m.num_bases());
  const auto s = static_cast<std::int64_t>(class_census(m).size());
  return (b * b - b - 2 * s) / 2;
}

BigInt nu_quadratic(const Matroid& m) {
  BigInt product = 1;
  for (const PairClass& cls : class_census(m)) {
    const auto r = static_cast<unsigned>(cls.delta());
    if (r >= 3) product *= boost::multiprecision::pow(BigInt(r), r - 2);
  }
  return product;
}

std::size_t delta_from_generators(const GeneratorReport& report, Mask b1, Mask b2) {
  auto known = [&](Mask b) {
    return std::binary_search(report.bases.begin(), report.bases.end(), b);
  };
  if (!known(b1) || !known(b2)) {
    throw MatroidError(ErrorCode::kNotABase, "subset is not a base of the matroid");
  }
  if (!report.quadratic_layer_complete) {
    throw MatroidError(ErrorCode::kInvalidArgument, "report has no quadratic layer");
  }
  std::size_t count = 0;
  for (const Binomial& g : report.generators) {
    if (g.degree() != 2) continue;
    const Mask x = report.bases[g.plus[0]];
    const Mask y = report.bases[g.plus[1]];
    if ((x & y) == (b1 & b2) && (x ^ y) == (b1 ^ b2)) ++count;
  }
  return 1 + count;
}

QuadraticVerdict is_quadratically_generated(const Matroid& m, int degree_bound,
                                            std::uint64_t fiber_cap) {
  if (degree_bound < 3) {
    throw MatroidError(ErrorCode::kInvalidArgument, "degree bound must be at least 3");
  }
  std::uint64_t total = 0;
  for (int d = 2; d <= degree_bound; ++d) total += multiset_count(m.num_bases(), d);
  if (total > fiber_cap) {
    throw MatroidError(ErrorCode::kFiberCapExceeded, "degree bound exceeds the fiber cap");
  }
  MarkovBasisBuilder builder(m, fiber_cap);
  builder.advance();
  QuadraticVerdict verdict;
  verdict.degree_bound = degree_bound;
  while (builder.degree_done() < degree_bound) {
    const std::size_t before = builder.report().generators.size();
    builder.advance();
    if (builder.report().generators.size() > before) {
      verdict.quadratic = false;
      verdict.degree_bound = builder.degree_done();
      verdict.witness = builder.report().generators[before];
      break;
    }
  }
  return verdict;
}

CiVerdict is_complete_intersection(const Matroid& m, int degree_bound, std::uint64_t fiber_cap) {
  if (degree_bound < 2) {
    throw MatroidError(ErrorCode::kInvalidArgument, "degree bound must be at least 2");
  }
  const Simplification s = simplify_loops_coloops(m);
  const Matroid& core = s.matroid;
  CiVerdict verdict;
  verdict.height = height(core);
  if (core.rank() < 2 || core.rank() > core.size() - 2) return verdict;
  MarkovBasisBuilder builder(core, fiber_cap);
  while (builder.degree_done() < degree_bound) {
    builder.advance();
    verdict.degree_bound = builder.degree_done();
    verdict.mu_truncated = builder.report().mu_truncated;
    if (static_cast<std::int64_t>(verdict.mu_truncated) > verdict.height) {
      verdict.kind = CiVerdict::Kind::kNotCi;
      return verdict;
    }
  }
  verdict.kind = static_cast<std::int64_t>(verdict.mu_truncated) == verdict.height
                     ? CiVerdict::Kind::kUpToDegree
                     : CiVerdict::Kind::kInconclusive;
  return verdict;
}

UniquenessVerdict unique_generating_set(const Matroid& m) {
  UniquenessVerdict v;
  if (m.rank() <= 1) return v;
  v.binary = is_binary(m);
  v.diameter = basis_graph_diameter(m);
  v.kind = v.binary && v.diameter <= 2 ? UniquenessVerdict::Kind::kUnique
                                       : UniquenessVerdict::Kind::kNotUnique;
  return v;
}

SimpleGraph rank2_graph(const Matroid& m) {
  if (m.rank() != 2) throw MatroidError(ErrorCode::kNotRankTwo, "matroid does not have rank 2");
  SimpleGraph g;
  g.vertices = m.size();
  g.adjacency.assign(m.size(), 0);
  for (Mask b : m.bases()) {
    const int i = std::countr_zero(b);
    const int j = 63 - std::countl_zero(b);
    g.adjacency[i] |= bit(j);
    g.adjacency[j] |= bit(i);
  }
  return g;
}

bool contains_k23(const SimpleGraph& g) {
  for (int i = 0; i < g.vertices; ++i) {
    for (int j = i + 1; j < g.vertices; ++j) {
      if (popcount(g.adjacency[i] & g.adjacency[j]) >= 3) return true;
    }
  }
  return false;
}

}  // namespace mtoric
