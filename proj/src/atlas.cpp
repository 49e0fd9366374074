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

#include "mtoric/atlas.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "mtoric/io.hpp"

namespace mtoric {
namespace {

// Flats of rank r-1 and r-2 of a matroid with small ground set, plus the
// hyperplane spanned by each independent (r-1)-set.
class HyperplaneLattice {
 public:
  explicit HyperplaneLattice(const Matroid& m) : m_(m) {
    const int n = m.size();
    const int r = m.rank();
    const std::size_t subsets = std::size_t{1} << n;
    rank_.resize(subsets);
    for (std::size_t s = 0; s < subsets; ++s) rank_[s] = m.rank_of(s);
    std::map<Mask, int> hyper_index;
    for (std::size_t s = 0; s < subsets; ++s) {
      if (rank_[s] != r - 1 && rank_[s] != r - 2) continue;
      if (!is_flat(s)) continue;
      if (rank_[s] == r - 1) {
        hyper_index[s] = static_cast<int>(hyperplanes_.size());
        hyperplanes_.push_back(s);
      } else {
        colines_.push_back(s);
      }
    }
    coline_members_.resize(colines_.size());
    hyper_colines_.resize(hyperplanes_.size());
    for (std::size_t c = 0; c < colines_.size(); ++c) {
      for (std::size_t h = 0; h < hyperplanes_.size(); ++h) {
        if ((hyperplanes_[h] & colines_[c]) == colines_[c]) {
          coline_members_[c].push_back(static_cast<int>(h));
          hyper_colines_[h].push_back(static_cast<int>(c));
        }
      }
    }
    for_each_k_subset(n, r - 1, [&](Mask s) {
      if (rank_[s] != r - 1) return;
      spanning_.push_back(s);
      spanned_.push_back(hyper_index.at(closure(s)));
    });
  }

  std::size_t num_hyperplanes() const { return hyperplanes_.size(); }

  // Calls emit(in) for every linear subclass; in[h] != 0 marks membership.
  void for_each_linear_subclass(const std::function<void(const std::vector<char>&)>& emit) const {
    std::vector<signed char> state(hyperplanes_.size(), -1);
    std::vector<char> member(hyperplanes_.size(), 0);
    search(0, state, member, emit);
  }

  // Bases of the extension whose new element lies on exactly the
  // hyperplanes of the subclass.
  std::vector<Mask> extension_bases(const std::vector<char>& in) const {
    std::vector<Mask> bases(m_.bases().begin(), m_.bases().end());
    const Mask added = bit(m_.size());
    for (std::size_t i = 0; i < spanning_.size(); ++i) {
      if (!in[spanned_[i]]) bases.push_back(spanning_[i] | added);
    }
    return bases;
  }

 private:
  bool is_flat(Mask s) const {
    bool flat = true;
    for_each_bit(m_.ground() & ~s, [&](int e) {
      if (rank_[s | bit(e)] == rank_[s]) flat = false;
    });
    return flat;
  }

  Mask closure(Mask s) const {
    Mask c = s;
    for_each_bit(m_.ground() & ~s, [&](int e) {
      if (rank_[s | bit(e)] == rank_[s]) c |= bit(e);
    });
    return c;
  }

  // Sets hyperplane h to value v and propagates: a coline lying on two
  // member hyperplanes drags every hyperplane through it into the subclass.
  bool assign(std::size_t h, signed char v, std::vector<signed char>& state) const {
    std::vector<std::pair<std::size_t, signed char>> queue{{h, v}};
    while (!queue.empty()) {
      auto [x, val] = queue.back();
      queue.pop_back();
      if (state[x] == val) continue;
      if (state[x] != -1) return false;
      state[x] = val;
      for (int c : hyper_colines_[x]) {
        int ins = 0;
        bool any_out = false;
        for (int y : coline_members_[c]) {
          ins += state[y] == 1;
          any_out |= state[y] == 0;
        }
        if (ins < 2) continue;
        if (any_out) return false;
        for (int y : coline_members_[c]) {
          if (state[y] == -1) queue.emplace_back(static_cast<std::size_t>(y), 1);
        }
      }
    }
    return true;
  }

  void search(std::size_t from, std::vector<signed char>& state, std::vector<char>& member,
              const std::function<void(const std::vector<char>&)>& emit) const {
    while (from < state.size() && state[from] != -1) ++from;
    if (from == state.size()) {
      for (std::size_t h = 0; h < state.size(); ++h) member[h] = state[h] == 1;
      emit(member);
      return;
    }
    for (signed char v : {0, 1}) {
      std::vector<signed char> next = state;
      if (assign(from, v, next)) search(from + 1, next, member, emit);
    }
  }

  const Matroid& m_;
  std::vector<int> rank_;
  std::vector<Mask> hyperplanes_;
  std::vector<Mask> colines_;
  std::vector<std::vector<int>> coline_members_;
  std::vector<std::vector<int>> hyper_colines_;
  std::vector<Mask> spanning_;
  std::vector<int> spanned_;
};

using ClassMap = std::map<std::string, Matroid>;

void insert_canonical(ClassMap& classes, const Matroid& m) {
  CanonicalForm form = canonical_form(m);
  if (classes.count(form.signature)) return;
  Matroid rep = canonical_representative(m, form);
  classes.emplace(std::move(form.signature), std::move(rep));
}

std::vector<Matroid> values_of(ClassMap& classes) {
  std::vector<Matroid> out;
  out.reserve(classes.size());
  for (auto& [sig, m] : classes) out.push_back(std::move(m));
  return out;
}

// Exchange check on a family encoded as a bitmap over the 2^n subsets (n <= 6).
bool family_is_matroid(std::uint64_t family, const std::vector<Mask>& bases) {
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      if (b1 == b2) continue;
      const Mask only2 = b2 & ~b1;
      Mask only1 = b1 & ~b2;
      while (only1 != 0) {
        const int e = std::countr_zero(only1);
        only1 &= only1 - 1;
        const Mask minus = b1 & ~bit(e);
        bool ok = false;
        Mask f_left = only2;
        while (f_left != 0 && !ok) {
          const int f = std::countr_zero(f_left);
          f_left &= f_left - 1;
          ok = (family >> (minus | bit(f))) & 1;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

std::vector<Matroid> enumerate_naive(int n, int r) {
  std::vector<Mask> subsets;
  for_each_k_subset(n, r, [&](Mask s) { subsets.push_back(s); });
  const std::size_t m = subsets.size();
  ClassMap classes;
  std::vector<Mask> bases;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
    bases.clear();
    std::uint64_t family = 0;
    for_each_bit(pick, [&](int i) {
      bases.push_back(subsets[i]);
      family |= std::uint64_t{1} << subsets[i];
    });
    if (!family_is_matroid(family, bases)) continue;
    insert_canonical(classes, Matroid::from_trusted_bases(n, r, bases));
  }
  return values_of(classes);
}

unsigned worker_count(const EnumerateOptions& options, std::size_t jobs) {
  unsigned t = options.threads;
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

class AugmentedEnumerator {
 public:
  explicit AugmentedEnumerator(const EnumerateOptions& options) : options_(options) {}

  const std::vector<Matroid>& get(int n, int r) {
    auto key = std::make_pair(n, r);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Matroid> result = build(n, r);
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  std::vector<Matroid> build(int n, int r) {
    if (r == 0) return {Matroid::from_trusted_bases(n, 0, {0})};
    if (r == n) return {Matroid::from_trusted_bases(n, n, {low_mask(n)})};
    const std::vector<Matroid>& same_rank = get(n - 1, r);
    const std::vector<Matroid>& lower_rank = get(n - 1, r - 1);

    ClassMap classes;
    for (const Matroid& p : lower_rank) {
      std::vector<Mask> bases;
      for (Mask b : p.bases()) bases.push_back(b | bit(n - 1));
      insert_canonical(classes, Matroid::from_trusted_bases(n, r, std::move(bases)));
    }

    const unsigned workers = worker_count(options_, same_rank.size());
    std::vector<ClassMap> partial(workers);
    auto work = [&](unsigned w) {
      for (std::size_t i = w; i < same_rank.size(); i += workers) {
        for (const Matroid& child : single_element_extensions(same_rank[i])) {
          insert_canonical(partial[w], child);
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (auto& part : partial) classes.merge(part);
    return values_of(classes);
  }

  EnumerateOptions options_;
  std::map<std::pair<int, int>, std::vector<Matroid>> memo_;
};

std::mutex& memo_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::tuple<int, int, int>, std::vector<Matroid>>& process_memo() {
  static std::map<std::tuple<int, int, int>, std::vector<Matroid>> memo;
  return memo;
}

}  // namespace

std::vector<Matroid> single_element_extensions(const Matroid& m) {
  if (m.size() + 1 > kMaxGroundSet || m.size() > 16) {
    throw MatroidError(ErrorCode::kBudgetExceeded, "extension search limited to n <= 16");
  }
  std::vector<Matroid> out;
  if (m.rank() == 0) {
    out.push_back(Matroid::from_trusted_bases(m.size() + 1, 0, {0}));
    return out;
  }
  const HyperplaneLattice lattice(m);
  lattice.for_each_linear_subclass([&](const std::vector<char>& in) {
    out.push_back(Matroid::from_trusted_bases(m.size() + 1, m.rank(),
                                              lattice.extension_bases(in)));
  });
  return out;
}

std::uint64_t count_linear_subclasses(const Matroid& m) {
  if (m.rank() == 0) return 1;
  const HyperplaneLattice lattice(m);
  std::uint64_t count = 0;
  lattice.for_each_linear_subclass([&](const std::vector<char>&) { ++count; });
  return count;
}

std::vector<Matroid> enumerate(int n, int r, const EnumerateOptions& options) {
  if (n < 0 || r < 0 || r > n) {
    throw MatroidError(ErrorCode::kRankOutOfRange, "need 0 <= r <= n");
  }
  const Regime regime = options.regime == Regime::kAuto ? Regime::kAugmented : options.regime;
  const int limit = regime == Regime::kNaive ? kNaiveLimit : kAugmentedLimit;
  if (n > limit) {
    throw MatroidError(ErrorCode::kBudgetExceeded,
                       "enumeration budget allows n <= " + std::to_string(limit) +
                           " in this regime");
  }
  if (!options.cache_path.empty()) {
    std::vector<Matroid> cached = load_class_cache(options.cache_path, n, r);
    if (!cached.empty()) return cached;
  }
  const auto key = std::make_tuple(n, r, static_cast<int>(regime));
  std::vector<Matroid> result;
  if (options.memoize) {
    std::lock_guard<std::mutex> lock(memo_mutex());
    if (auto it = process_memo().find(key); it != process_memo().end()) result = it->second;
  }
  if (result.empty()) {
    if (regime == Regime::kNaive) {
      result = enumerate_naive(n, r);
    } else {
      AugmentedEnumerator builder(options);
      result = builder.get(n, r);
    }
    if (options.memoize) {
      std::lock_guard<std::mutex> lock(memo_mutex());
      process_memo().emplace(key, result);
    }
  }
  if (!options.cache_path.empty()) append_class_cache(options.cache_path, result);
  return result;
}

std::vector<Matroid> search_bases_cobases(int n, int r, std::uint64_t k,
                                          const EnumerateOptions& options) {
  std::vector<Matroid> out;
  for (const Matroid& m : enumerate(n, r, options)) {
    if (bases_cobases(m) == k) out.push_back(m);
  }
  return out;
}

std::vector<Matroid> load_class_cache(const std::string& path, int n, int r) {
  std::ifstream in(path);
  if (!in) return {};
  ClassMap classes;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    int ln = -1;
    int lr = -1;
    std::string bits;
    if (!(fields >> ln >> lr >> bits)) {
      throw MatroidError(ErrorCode::kParseError,
                         path + ":" + std::to_string(line_no) + ": malformed cache line");
    }
    if (ln != n || lr != r) continue;
    insert_canonical(classes, parse_bitstring(ln, lr, bits, SubsetOrder::kLex));
  }
  return values_of(classes);
}

void append_class_cache(const std::string& path, const std::vector<Matroid>& classes) {
  if (!classes.empty()) {
    const int n = classes.front().size();
    const int r = classes.front().rank();
    if (!load_class_cache(path, n, r).empty()) return;
  }
  std::ofstream out(path, std::ios::app);
  if (!out) {
    throw MatroidError(ErrorCode::kInvalidArgument, "cannot write cache file " + path);
  }
  for (const Matroid& m : classes) {
    out << m.size() << ' ' << m.rank() << ' ' << format_bitstring(m, SubsetOrder::kLex) << '\n';
  }
}

}  // namespace mtoric
