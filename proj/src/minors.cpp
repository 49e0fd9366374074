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

#include "mtoric/minors.hpp"

#include <set>

#include "mtoric/atlas.hpp"
#include "mtoric/canonical.hpp"
#include "mtoric/fibers.hpp"

namespace mtoric {
namespace {

// Visits every ordered split (deleted, contracted) of `removed_count`
// elements, contracted sets in increasing size, then by mask value.
template <class F>
void for_each_split(const Matroid& m, int removed_count, F&& visit) {
  const int n = m.size();
  for (int c = 0; c <= removed_count; ++c) {
    bool stop = false;
    for_each_k_subset(n, c, [&](Mask contracted) {
      if (stop) return;
      const Mask rest = m.ground() & ~contracted;
      for_each_k_subset(n - c, removed_count - c, [&](Mask local) {
        if (stop) return;
        if (visit(expand(local, rest), contracted)) stop = true;
      });
    });
    if (stop) return;
  }
}

bool rank_matches(const Matroid& m, Mask deleted, Mask contracted, int target_rank) {
  return m.rank_of(m.ground() & ~deleted) - m.rank_of(contracted) == target_rank;
}

}  // namespace

std::optional<MinorWitness> has_minor(const Matroid& host, const Matroid& target) {
  if (target.size() > host.size()) {
    throw MatroidError(ErrorCode::kTargetLargerThanHost,
                       "target has more elements than the host");
  }
  if (target.rank() > host.rank()) return std::nullopt;
  const CanonicalForm target_form = canonical_form(target);
  std::set<std::vector<Mask>> seen;
  std::optional<MinorWitness> found;
  for_each_split(host, host.size() - target.size(), [&](Mask deleted, Mask contracted) {
    if (!rank_matches(host, deleted, contracted, target.rank())) return false;
    MinorResult candidate = minor(host, GroundSubset{deleted}, GroundSubset{contracted});
    if (candidate.matroid.num_bases() != target.num_bases()) return false;
    std::vector<Mask> signature(candidate.matroid.bases().begin(), candidate.matroid.bases().end());
    if (!seen.insert(std::move(signature)).second) return false;
    const CanonicalForm form = canonical_form(candidate.matroid);
    if (form.signature != target_form.signature) return false;
    MinorWitness w{GroundSubset{deleted}, GroundSubset{contracted},
                   std::vector<int>(target.size())};
    // Both forms send position p to the same canonical label.
    for (int p = 0; p < target.size(); ++p) {
      const int minor_element = form.permutation[p];
      w.iso[target_form.permutation[p] - 1] = candidate.original[minor_element - 1];
    }
    found = std::move(w);
    return true;
  });
  return found;
}

bool witness_reproduces(const Matroid& host, const Matroid& target, const MinorWitness& w) {
  if (w.deleted.mask & w.contracted.mask) return false;
  MinorResult result = minor(host, w.deleted, w.contracted);
  if (result.matroid.size() != target.size() || static_cast<int>(w.iso.size()) != target.size()) {
    return false;
  }
  // Relabel the minor into the target's labels and compare base sets.
  std::vector<int> new_label(result.matroid.size(), 0);
  for (int t = 0; t < target.size(); ++t) {
    for (int i = 0; i < result.matroid.size(); ++i) {
      if (result.original[i] == w.iso[t]) new_label[i] = t + 1;
    }
  }
  for (int label : new_label) {
    if (label == 0) return false;
  }
  return relabel(result.matroid, new_label) == target;
}

bool is_binary(const Matroid& m) {
  for (const PairClass& cls : class_census(m)) {
    if (cls.delta() == 3) return false;
  }
  return true;
}

bool has_u36_minor(const Matroid& m) {
  for (const PairClass& cls : class_census(m)) {
    const int d = cls.distance();
    if ((d == 3 || d == 4) && cls.delta() == 10) return true;
  }
  return false;
}

bool uniform_minor_necessary(const Matroid& m, int d) {
  if (d < 2) throw MatroidError(ErrorCode::kInvalidArgument, "d must be at least 2");
  const std::uint64_t target = binomial(2 * d - 1, d);
  for (const PairClass& cls : class_census(m)) {
    if (cls.delta() == target) return true;
  }
  return false;
}

ConnectedMinorCertificate certify_connected_minors(const Matroid& m, int target_n,
                                                   int target_r) {
  if (target_n > m.size()) {
    throw MatroidError(ErrorCode::kTargetLargerThanHost, "target larger than host");
  }
  ConnectedMinorCertificate cert;
  const std::uint64_t full = binomial(target_n, target_r);
  for_each_split(m, m.size() - target_n, [&](Mask deleted, Mask contracted) {
    ++cert.candidates;
    if (!rank_matches(m, deleted, contracted, target_r)) return false;
    ++cert.matching_rank;
    const MinorResult result = minor(m, GroundSubset{deleted}, GroundSubset{contracted});
    if (result.matroid.num_bases() == full) ++cert.matching_base_count;
    if (connected_components(result.matroid).count == 1) ++cert.connected;
    return false;
  });
  return cert;
}

D5Counterexample build_d5_counterexample() {
  const std::vector<Matroid> with14 = search_bases_cobases(6, 3, 14);
  const std::vector<Matroid> with18 = search_bases_cobases(6, 3, 18);
  if (with14.empty() || with18.empty()) {
    throw MatroidError(ErrorCode::kSearchFailed,
                       "no rank-3 matroid on 6 elements with 14 or 18 bases-cobases");
  }
  D5Counterexample out{direct_sum(with14.front(), with18.front()), with14.front(),
                       with18.front(), 0, 0, 0, 0, {}};
  out.bases_cobases = bases_cobases(out.matroid);
  for (Mask b : out.matroid.bases()) {
    const Mask rest = out.matroid.ground() & ~b;
    if (out.matroid.is_base(rest)) {
      out.base = b;
      out.complement = rest;
      break;
    }
  }
  if (out.base == out.complement) {
    throw MatroidError(ErrorCode::kSearchFailed, "direct sum has no base-cobase");
  }
  out.delta = delta(out.matroid, out.base, out.complement);
  out.certificate = certify_connected_minors(out.matroid, 10, 5);
  return out;
}

}  // namespace mtoric
