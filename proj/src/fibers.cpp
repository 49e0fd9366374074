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

#include "mtoric/fibers.hpp"

#include <algorithm>
#include <unordered_map>

namespace mtoric {
namespace {

void require_base(const Matroid& m, Mask b) {
  if (!m.is_base(b)) {
    throw MatroidError(ErrorCode::kNotABase, "subset is not a base of the matroid");
  }
}

struct PairKeyHash {
  std::size_t operator()(const std::pair<Mask, Mask>& k) const noexcept {
    return std::hash<Mask>{}(k.first * 0x9E3779B97F4A7C15ull ^ k.second);
  }
};

}  // namespace

DegreeVector degree_of(int n, std::span<const Mask> bases) {
  DegreeVector d;
  d.counts.assign(n, 0);
  for (Mask b : bases) for_each_bit(b, [&](int e) { ++d.counts[e]; });
  return d;
}

PairClass pair_class(const Matroid& m, Mask b1, Mask b2) {
  require_base(m, b1);
  require_base(m, b2);
  if (b1 == b2) {
    throw MatroidError(ErrorCode::kIdenticalBases, "pair of identical bases");
  }
  const Mask common = b1 & b2;
  const Mask sym = b1 ^ b2;
  PairClass cls;
  const Mask pair[2] = {b1, b2};
  cls.key = degree_of(m.size(), pair);
  for (Mask d : m.bases()) {
    if ((d & common) != common || (d & ~(common | sym))) continue;
    const Mask partner = common | (sym & ~d);
    if (d < partner && m.is_base(partner)) cls.members.push_back({d, partner});
  }
  std::sort(cls.members.begin(), cls.members.end());
  return cls;
}

std::size_t delta(const Matroid& m, Mask b1, Mask b2) {
  return pair_class(m, b1, b2).delta();
}

std::vector<PairClass> class_census(const Matroid& m) {
  const auto bases = m.bases();
  std::unordered_map<std::pair<Mask, Mask>, std::size_t, PairKeyHash> index;
  std::vector<PairClass> classes;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      const std::pair<Mask, Mask> key{bases[i] & bases[j], bases[i] ^ bases[j]};
      auto [it, inserted] = index.try_emplace(key, classes.size());
      if (inserted) {
        PairClass cls;
        const Mask pair[2] = {bases[i], bases[j]};
        cls.key = degree_of(m.size(), pair);
        classes.push_back(std::move(cls));
      }
      // Pairs arrive in canonical order, so members stay sorted.
      classes[it->second].members.push_back({bases[i], bases[j]});
    }
  }
  return classes;
}

DeltaBoundsReport delta_bounds_check(const Matroid& m) {
  DeltaBoundsReport report;
  for (const PairClass& cls : class_census(m)) {
    const int d = cls.distance();
    auto it = std::find_if(report.by_distance.begin(), report.by_distance.end(),
                           [d](const DeltaRange& r) { return r.distance == d; });
    if (it == report.by_distance.end()) {
      DeltaRange r;
      r.distance = d;
      r.min_delta = cls.delta();
      r.max_delta = cls.delta();
      r.lower_bound = std::uint64_t{1} << (d - 1);
      r.upper_bound = binomial(2 * d - 1, d);
      report.by_distance.push_back(r);
      it = report.by_distance.end() - 1;
    }
    it->min_delta = std::min(it->min_delta, cls.delta());
    it->max_delta = std::max(it->max_delta, cls.delta());
    ++it->classes;
    if (cls.delta() < it->lower_bound || cls.delta() > it->upper_bound) {
      report.holds = false;
      report.violations.push_back({cls.members.front(), cls.delta()});
    }
  }
  std::sort(report.by_distance.begin(), report.by_distance.end(),
            [](const DeltaRange& a, const DeltaRange& b) { return a.distance < b.distance; });
  return report;
}

CobaseBridge cobase_bridge(const Matroid& m, Mask b1, Mask b2) {
  require_base(m, b1);
  require_base(m, b2);
  if (b1 == b2) {
    throw MatroidError(ErrorCode::kIdenticalBases, "pair of identical bases");
  }
  const Mask common = b1 & b2;
  const Mask sym = b1 ^ b2;
  // Contract the intersection first, then restrict to the symmetric
  // difference expressed in the contracted labels.
  MinorResult contracted = minor(m, GroundSubset{}, GroundSubset{common});
  const Mask kept_in_contracted = compress(sym, m.ground() & ~common);
  MinorResult restricted = restriction(contracted.matroid, GroundSubset{kept_in_contracted});
  std::vector<int> original;
  for (int e : restricted.original) original.push_back(contracted.original[e - 1]);
  CobaseBridge out{MinorResult{std::move(restricted.matroid), std::move(original)}, 0};
  out.bases_cobases = bases_cobases(out.minor.matroid);
  return out;
}

}  // namespace mtoric
