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

#include "mtoric/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace mtoric {
namespace {

// Depth-first minimal-image search. Fixing the original element at
// position k decides exactly the colex block of r-subsets whose largest
// position is k, so the signature grows by contiguous blocks and a branch
// is cut as soon as its block compares greater than the incumbent.
class MinimalImage {
 public:
  explicit MinimalImage(const Matroid& m) : m_(m), n_(m.size()), r_(m.rank()) {
    blocks_.resize(n_);
    offsets_.resize(n_ + 1, 0);
    for (int k = 0; k < n_; ++k) {
      if (r_ >= 1) {
        for_each_k_subset(k, r_ - 1, [&](Mask s) { blocks_[k].push_back(s); });
      }
      offsets_[k + 1] = offsets_[k] + blocks_[k].size();
    }
    if (r_ == 0) offsets_[n_] = 1;
    current_.assign(offsets_[n_], '0');
    table_.assign(std::size_t{1} << n_, 0);
    position_.assign(n_, -1);
  }

  CanonicalForm run() {
    if (r_ == 0 || n_ == 0) {
      // Only the empty set is a base: every labeling gives the same image.
      CanonicalForm f{n_, r_, std::string(binomial(n_, r_), '1'), {}};
      for (int e = 1; e <= n_; ++e) f.permutation.push_back(e);
      return f;
    }
    descend(0, 0, false);
    CanonicalForm f{n_, r_, best_, {}};
    for (int p : best_position_) f.permutation.push_back(p + 1);
    return f;
  }

 private:
  void descend(int k, Mask used, bool ahead) {
    if (k == n_) {
      if (ahead) {
        best_ = current_;
        best_position_ = position_;
        have_best_ = true;
        ++version_;
      }
      return;
    }
    const std::size_t offset = offsets_[k];
    const std::size_t len = blocks_[k].size();
    const std::size_t half = std::size_t{1} << k;
    for (int x = 0; x < n_; ++x) {
      if (used & bit(x)) continue;
      position_[k] = x;
      for (std::size_t s = 0; s < half; ++s) table_[half + s] = table_[s] | bit(x);
      for (std::size_t i = 0; i < len; ++i) {
        const Mask original = table_[blocks_[k][i] | half];
        current_[offset + i] = m_.is_base(original) ? '1' : '0';
      }
      bool child_ahead = ahead || !have_best_;
      if (!child_ahead) {
        const int c = current_.compare(offset, len, best_, offset, len);
        if (c > 0) continue;
        child_ahead = c < 0;
      }
      const std::uint64_t before = version_;
      descend(k + 1, used | bit(x), child_ahead);
      // A new incumbent from this subtree shares our prefix.
      if (version_ != before) ahead = false;
    }
    position_[k] = -1;
  }

  const Matroid& m_;
  int n_;
  int r_;
  std::vector<std::vector<Mask>> blocks_;
  std::vector<std::size_t> offsets_;
  std::string current_;
  std::string best_;
  bool have_best_ = false;
  std::uint64_t version_ = 0;
  // table_[s] = original mask of the position mask s for assigned positions.
  std::vector<Mask> table_;
  std::vector<int> position_;
  std::vector<int> best_position_;
};

}  // namespace

CanonicalForm canonical_form(const Matroid& m) {
  if (m.size() > kCanonicalLimit) {
    throw MatroidError(ErrorCode::kGroundSetTooLargeForCanonicalization,
                       "canonical form needs n <= " + std::to_string(kCanonicalLimit));
  }
  return MinimalImage(m).run();
}

bool is_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.num_bases() != b.num_bases()) {
    return false;
  }
  return canonical_form(a).signature == canonical_form(b).signature;
}

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.num_bases() != b.num_bases()) {
    return std::nullopt;
  }
  const CanonicalForm fa = canonical_form(a);
  const CanonicalForm fb = canonical_form(b);
  if (fa.signature != fb.signature) return std::nullopt;
  std::vector<int> iso(a.size());
  for (int p = 0; p < a.size(); ++p) iso[fa.permutation[p] - 1] = fb.permutation[p];
  return iso;
}

Matroid relabel(const Matroid& m, std::span<const int> new_label) {
  std::vector<Mask> bases;
  bases.reserve(m.num_bases());
  for (Mask b : m.bases()) {
    Mask out = 0;
    for_each_bit(b, [&](int e) { out |= bit(new_label[e] - 1); });
    bases.push_back(out);
  }
  return Matroid::from_trusted_bases(m.size(), m.rank(), std::move(bases));
}

Matroid canonical_representative(const Matroid& m, const CanonicalForm& form) {
  std::vector<int> new_label(m.size());
  for (int p = 0; p < m.size(); ++p) new_label[form.permutation[p] - 1] = p + 1;
  return relabel(m, new_label);
}

}  // namespace mtoric
