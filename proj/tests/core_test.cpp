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

#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "mtoric/canonical.hpp"

namespace mtoric {
namespace {

using testing::k4;
using testing::m1;
using testing::t163544;

Mask set(std::initializer_list<int> e) { return mask_of(std::vector<int>(e)); }

TEST(FromBases, AcceptsM1) {
  const Matroid m = m1();
  EXPECT_EQ(m.size(), 4);
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.num_bases(), 4u);
  EXPECT_TRUE(m.is_base(set({1, 2})));
  EXPECT_FALSE(m.is_base(set({1, 4})));
}

TEST(FromBases, ReportsExchangeWitness) {
  try {
    Matroid::from_bases(4, 2, std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    FAIL() << "expected an exchange violation";
  } catch (const ExchangeAxiomError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExchangeAxiomViolated);
    EXPECT_EQ(e.violation().first, set({1, 2}));
    EXPECT_EQ(e.violation().second, set({3, 4}));
    EXPECT_EQ(e.violation().element, 1);
  }
}

TEST(FromBases, RejectsMalformedInput) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const MatroidError& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code([] { Matroid::from_bases(3, 2, std::vector<std::vector<int>>{{1, 2}, {3}}); }),
            ErrorCode::kNotEquicardinal);
  EXPECT_EQ(code([] { Matroid::from_bases(3, 1, std::vector<std::vector<int>>{{4}}); }),
            ErrorCode::kInvalidSubset);
  EXPECT_EQ(code([] { Matroid::from_bases(65, 1, std::vector<Mask>{1}); }),
            ErrorCode::kGroundSetTooLarge);
}

TEST(FromBases, UniformRankOne) {
  const Matroid m = Matroid::from_bases(3, 1, std::vector<std::vector<int>>{{1}, {2}, {3}});
  EXPECT_EQ(m, uniform(1, 3));
}

TEST(Exchange, SymmetricAndMultipleHoldOnExamples) {
  for (const Matroid& m : {uniform(2, 4), m1(), t163544(), uniform(3, 6), k4()}) {
    EXPECT_TRUE(check_exchange_axiom(m).holds);
    EXPECT_TRUE(verify_symmetric_exchange(m).holds);
    EXPECT_TRUE(verify_multiple_symmetric_exchange(m).holds);
  }
}

TEST(Exchange, HoldsForEveryClassUpToSix) {
  for (const Matroid& m : testing::all_classes(6)) {
    ASSERT_TRUE(verify_symmetric_exchange(m).holds);
    ASSERT_TRUE(verify_multiple_symmetric_exchange(m).holds);
  }
}

TEST(Uniform, BaseCounts) {
  EXPECT_EQ(uniform(2, 4).num_bases(), 6u);
  EXPECT_EQ(uniform(0, 3).num_bases(), 1u);
  EXPECT_EQ(uniform(0, 3).bases()[0], 0u);
  EXPECT_EQ(uniform(3, 6).num_bases(), 20u);
  EXPECT_THROW(uniform(4, 3), MatroidError);
}

TEST(Transversal, Examples) {
  const Matroid t = t163544();
  EXPECT_EQ(t.num_bases(), 8u);
  EXPECT_EQ(t.rank(), 3);
  const Matroid small = transversal(4, {{1, 3}, {2, 4}});
  // One representative from {1,3} and one from {2,4}.
  EXPECT_EQ(small, Matroid::from_bases(4, 2, std::vector<std::vector<int>>{
                                                 {1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  EXPECT_TRUE(is_isomorphic(small, m1()));
  const Matroid one = transversal(2, {{1, 2}});
  EXPECT_EQ(one.rank(), 1);
  EXPECT_EQ(one.num_bases(), 2u);
  EXPECT_THROW(transversal(3, {}), MatroidError);
}

TEST(Transversal, DeficientPresentationUsesMaximumMatchings) {
  // Both sets are {1}; only one can be matched.
  const Matroid m = transversal(2, {{1}, {1}});
  EXPECT_EQ(m.rank(), 1);
  EXPECT_EQ(m.num_bases(), 1u);
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual(uniform(2, 4)), uniform(2, 4));
  EXPECT_EQ(dual(dual(m1())), m1());
  const Matroid t = t163544();
  const Matroid d = dual(t);
  ASSERT_EQ(d.num_bases(), t.num_bases());
  for (Mask b : t.bases()) EXPECT_TRUE(d.is_base(t.ground() & ~b));
}

TEST(Minors, UniformExamples) {
  const Matroid u = uniform(2, 4);
  EXPECT_EQ(deletion(u, GroundSubset::of({4})).matroid, uniform(2, 3));
  EXPECT_EQ(contraction(u, GroundSubset::of({4})).matroid, uniform(1, 3));
  const auto r = deletion(u, GroundSubset::of({2}));
  EXPECT_EQ(r.original, (std::vector<int>{1, 3, 4}));
}

TEST(Minors, ContractionIsDualDeleteDual) {
  const Matroid u = uniform(3, 6);
  const GroundSubset a = GroundSubset::of({1, 2});
  EXPECT_EQ(contraction(u, a).matroid, dual(deletion(dual(u), a).matroid));
}

TEST(Minors, RejectWholeGroundSet) {
  EXPECT_THROW(deletion(m1(), GroundSubset{m1().ground()}), MatroidError);
  EXPECT_THROW(contraction(m1(), GroundSubset{bit(7)}), MatroidError);
}

TEST(Minors, MatchRankOracleOnCorpus) {
  // Bases of M\A are the maximal subsets of E-A independent in M; bases of
  // M/C are the sets S with S ∪ I a base for a fixed basis I of C.
  std::mt19937 rng(7);
  for (const Matroid& m : testing::all_classes(5)) {
    if (m.size() < 2) continue;
    const Mask a = std::uniform_int_distribution<Mask>(1, m.ground() - 1)(rng);
    const Mask keep = m.ground() & ~a;
    const int rk = testing::brute_rank(m, keep);
    std::vector<Mask> expected;
    for (Mask s : m.bases()) {
      if (popcount(s & keep) == rk) expected.push_back(s & keep);
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    const MinorResult del = deletion(m, GroundSubset{a});
    std::vector<Mask> got;
    for (Mask b : del.matroid.bases()) got.push_back(expand(b, keep));
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, expected);

    const Matroid via_dual = dual(deletion(dual(m), GroundSubset{a}).matroid);
    ASSERT_EQ(contraction(m, GroundSubset{a}).matroid, via_dual);
  }
}

TEST(Loops, Examples) {
  EXPECT_EQ(loops(uniform(2, 4)).mask, 0u);
  EXPECT_EQ(coloops(uniform(2, 4)).mask, 0u);
  EXPECT_EQ(coloops(Matroid::from_bases(3, 2, std::vector<std::vector<int>>{{1, 2}, {1, 3}})).mask,
            set({1}));
  EXPECT_EQ(loops(Matroid::from_bases(3, 1, std::vector<std::vector<int>>{{1}, {2}})).mask,
            set({3}));
}

TEST(Loops, SimplifyRemovesBoth) {
  const Matroid m = direct_sum(direct_sum(uniform(0, 1), uniform(2, 4)), uniform(1, 1));
  const Simplification s = simplify_loops_coloops(m);
  EXPECT_EQ(s.matroid, uniform(2, 4));
  EXPECT_EQ(s.removed_loops.mask, set({1}));
  EXPECT_EQ(s.removed_coloops.mask, set({6}));
  EXPECT_EQ(s.original, (std::vector<int>{2, 3, 4, 5}));
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(t163544()).count, 3);
  EXPECT_EQ(connected_components(uniform(2, 4)).count, 1);
  EXPECT_EQ(connected_components(m1()).count, 2);
}

TEST(Components, AgreeWithCircuitOracle) {
  for (const Matroid& m : testing::all_classes(6)) {
    const Components c = connected_components(m);
    std::set<Mask> parts;
    for (const auto& p : c.parts) parts.insert(p.mask);
    ASSERT_EQ(parts, testing::circuit_components(m));
    ASSERT_EQ(static_cast<std::size_t>(c.count), parts.size());
  }
}

TEST(DirectSum, Examples) {
  EXPECT_TRUE(is_isomorphic(direct_sum(uniform(1, 2), uniform(1, 2)), m1()));
  EXPECT_EQ(direct_sum(uniform(1, 1), uniform(1, 1)).num_bases(), 1u);
  EXPECT_THROW(direct_sum(uniform(1, 40), uniform(1, 40)), MatroidError);
}

TEST(DirectSum, ProductAndComponentSum) {
  std::mt19937 rng(11);
  const auto pool = testing::all_classes(4);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Matroid& a = pool[pick(rng)];
    const Matroid& b = pool[pick(rng)];
    const Matroid s = direct_sum(a, b);
    ASSERT_EQ(s.num_bases(), a.num_bases() * b.num_bases());
    ASSERT_EQ(connected_components(s).count,
              connected_components(a).count + connected_components(b).count);
  }
}

TEST(BasesCobases, Examples) {
  EXPECT_EQ(bases_cobases(uniform(3, 6)), 20u);
  EXPECT_EQ(bases_cobases(uniform(2, 4)), 6u);
  EXPECT_EQ(bases_cobases(m1()), 4u);
}

TEST(BasisGraph, Diameters) {
  EXPECT_EQ(basis_graph_diameter(uniform(2, 4)), 2);
  EXPECT_EQ(basis_graph_diameter(m1()), 2);
  EXPECT_EQ(basis_graph_diameter(uniform(1, 3)), 1);
}

TEST(BasisGraph, ConnectedAndMatchesFloydWarshall) {
  for (const Matroid& m : testing::all_classes(6)) {
    const int d = basis_graph_diameter(m);
    ASSERT_EQ(d, testing::brute_diameter(m));
    ASSERT_LE(d, m.rank());
    const BasisGraph g = basis_graph(m);
    std::size_t edges = 0;
    for (const auto& adj : g.adjacency) edges += adj.size();
    ASSERT_EQ(edges % 2, 0u);
  }
}

TEST(Sbo, Examples) {
  EXPECT_TRUE(strongly_base_orderable(uniform(3, 6)).holds);
  EXPECT_TRUE(strongly_base_orderable(m1()).holds);
  const SboReport k = strongly_base_orderable(k4());
  EXPECT_FALSE(k.holds);
  ASSERT_TRUE(k.failing_pair.has_value());
  EXPECT_THROW(strongly_base_orderable(uniform(9, 10)), MatroidError);
}

TEST(Sbo, WitnessesAreValidOrderings) {
  const SboReport r = strongly_base_orderable(testing::t163544());
  ASSERT_TRUE(r.holds);
  const Matroid t = testing::t163544();
  for (const OrderingWitness& w : r.witnesses) {
    std::vector<std::pair<Mask, Mask>> moves;
    for (auto [a, b] : w.map) moves.emplace_back(bit(a - 1), bit(b - 1));
    for (Mask c = 0; c < (Mask{1} << moves.size()); ++c) {
      Mask s = w.first;
      for (std::size_t i = 0; i < moves.size(); ++i) {
        if (c >> i & 1) s = (s & ~moves[i].first) | moves[i].second;
      }
      ASSERT_TRUE(t.is_base(s));
    }
  }
}

TEST(Sbo, AgreesWithExhaustiveBijections) {
  for (const Matroid& m : testing::all_classes(6)) {
    ASSERT_EQ(strongly_base_orderable(m).holds, testing::brute_sbo(m));
  }
}

TEST(Properties, DualInvolutionAndCounts) {
  std::mt19937 rng(3);
  for (const Matroid& m : testing::all_classes(6)) {
    const Matroid p = testing::permuted(m, testing::random_permutation(m.size(), rng));
    ASSERT_EQ(dual(dual(p)), p);
    ASSERT_EQ(dual(p).num_bases(), p.num_bases());
    ASSERT_EQ(dual(p).rank(), p.size() - p.rank());
  }
}

TEST(Properties, RankZeroAndFullRank) {
  const Matroid z = uniform(0, 4), f = uniform(4, 4);
  EXPECT_EQ(loops(z).mask, z.ground());
  EXPECT_EQ(coloops(f).mask, f.ground());
  EXPECT_EQ(connected_components(z).count, 4);
  EXPECT_EQ(basis_graph_diameter(f), 0);
}

}  // namespace
}  // namespace mtoric
