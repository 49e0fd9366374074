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

// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact (tolerance zero); each criterion also has a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mtoric/atlas.hpp"
#include "mtoric/canonical.hpp"
#include "mtoric/fibers.hpp"
#include "mtoric/minors.hpp"
#include "mtoric/scan.hpp"
#include "mtoric/toric.hpp"

namespace {

using namespace mtoric;

Matroid m1() {
  return Matroid::from_bases(4, 2, std::vector<std::vector<int>>{{1, 2}, {3, 4}, {1, 3}, {2, 4}});
}
Matroid m2() {
  return Matroid::from_bases(4, 2,
                             std::vector<std::vector<int>>{{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}});
}
Matroid t163544() { return transversal(6, {{1, 6}, {2, 5}, {3, 4}}); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [MISMATCH]");
  }
};

template <class T>
std::string eq(const char* name, const T& got, const T& want) {
  std::ostringstream s;
  s << name << "=" << got << " (expected " << want << ")";
  return s.str();
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

void heights(Outcome& o) {
  o.expect(height(m1()) == 1, eq("ht(M1)", height(m1()), std::int64_t{1}));
  o.expect(height(m2()) == 1, eq("ht(M2)", height(m2()), std::int64_t{1}));
  o.expect(height(uniform(2, 4)) == 2, eq("ht(U24)", height(uniform(2, 4)), std::int64_t{2}));
  const Matroid t = t163544();
  o.expect(height(t) == 4, eq("ht(T)", height(t), std::int64_t{4}));
  const auto mu = markov_basis(t, 2).mu_truncated;
  o.expect(mu == 9, eq("mu2(T)", mu, std::uint64_t{9}));
}

void ci_classification(Outcome& o) {
  const ScanReport r = scan(7, ScanCheck::kCiClassification);
  o.expect(r.flagged.size() == 3, eq("CI classes", r.flagged.size(), std::size_t{3}));
  std::vector<Matroid> expected{m1(), m2(), uniform(2, 4)};
  for (const ScanFinding& f : r.flagged) {
    bool known = false;
    for (const Matroid& e : expected) known = known || is_isomorphic(f.matroid, e);
    o.expect(known && f.matroid.size() == 4, "flagged class n=" + std::to_string(f.matroid.size()) +
                                                 " b=" + std::to_string(f.matroid.num_bases()));
  }
  o.expect(r.counterexamples.empty(),
           eq("uncertified or misclassified", r.counterexamples.size(), std::size_t{0}));
  o.expect(r.passed == r.examined, eq("certified", r.passed, r.examined));
}

void scan_clean(Outcome& o, ScanCheck check, int n_max) {
  const ScanReport r = scan(n_max, check);
  o.expect(r.counterexamples.empty(),
           std::string(scan_check_name(check)) + ": " + std::to_string(r.examined) +
               " classes, " + std::to_string(r.counterexamples.size()) + " counterexamples");
  for (const ScanFinding& f : r.counterexamples) o.expect(false, f.detail);
}

void u36(Outcome& o) {
  scan_clean(o, ScanCheck::kU36VsDelta, 7);
  const std::vector<Matroid> pool = enumerate(8, 4);
  std::mt19937 rng(20260101);
  std::vector<std::size_t> idx(pool.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::size_t bad = 0, with_minor = 0;
  for (std::size_t k = 0; k < 50 && k < idx.size(); ++k) {
    const Matroid& m = pool[idx[k]];
    const bool minor = has_minor(m, uniform(3, 6)).has_value();
    with_minor += minor;
    if (minor != has_u36_minor(m)) ++bad;
  }
  o.expect(bad == 0, "50 sampled rank-4 n=8 classes (" + std::to_string(with_minor) +
                         " with a U(3,6) minor), " + std::to_string(bad) + " counterexamples");
}

void enumeration_counts(Outcome& o) {
  // Fresh runs, so the limits measure enumeration and not the result table.
  EnumerateOptions fresh;
  fresh.memoize = false;
  auto timed = [&](int n, int r, std::size_t& count) {
    const auto t0 = std::chrono::steady_clock::now();
    count = enumerate(n, r, fresh).size();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  std::size_t c63 = 0, c84 = 0;
  const double s63 = timed(6, 3, c63);
  o.expect(c63 == 36, eq("classes(6,3)", c63, std::size_t{36}));
  o.expect(s63 < 10.0, "(6,3) in " + std::to_string(s63) + " s (limit 10 s)");
  const double s84 = timed(8, 4, c84);
  o.expect(c84 == 940, eq("classes(8,4)", c84, std::size_t{940}));
  o.expect(s84 < 7200.0, "(8,4) in " + std::to_string(s84) + " s (limit 7200 s)");
}

void rank4_nonexistence(Outcome& o) {
  std::size_t matches = 0;
  const auto classes = enumerate(8, 4);
  for (const Matroid& m : classes) matches += bases_cobases(m) == 20;
  o.expect(matches == 0, eq("classes(8,4) with 20 bases-cobases", matches, std::size_t{0}) +
                             " among " + std::to_string(classes.size()));
}

void d5(Outcome& o) {
  const D5Counterexample d = build_d5_counterexample();
  o.expect(d.bases_cobases == 252, eq("bases-cobases", d.bases_cobases, std::uint64_t{252}));
  o.expect(d.delta == 126 && d.delta == binomial(9, 5), eq("delta", d.delta, std::size_t{126}));
  o.expect(uniform_minor_necessary(d.matroid, 5), "extreme delta present");
  o.expect(d.certificate.matching_rank > 0 && d.certificate.excludes_connected_minor(),
           std::to_string(d.certificate.matching_rank) + " rank-5 minors on 10 elements, " +
               std::to_string(d.certificate.connected) + " connected (no U(5,10) minor)");
}

void delta_laws(Outcome& o) {
  scan_clean(o, ScanCheck::kDeltaBounds, 7);
  scan_clean(o, ScanCheck::kCobaseBridge, 7);
}

void generator_laws(Outcome& o) {
  std::vector<Matroid> corpus{m1(), m2(), uniform(2, 4), uniform(3, 6), t163544(),
                              transversal(6, {{1, 4}, {2, 5}, {3, 6}})};
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const Matroid& m : enumerate(n, r)) corpus.push_back(m);
    }
  }
  std::size_t pairs = 0, bad_delta = 0, bad_mu = 0;
  for (const Matroid& m : corpus) {
    const GeneratorReport rep = markov_basis(m, 2);
    for (const PairClass& c : class_census(m)) {
      ++pairs;
      const BasePair& p = c.members.front();
      if (delta_from_generators(rep, p.first, p.second) != c.delta()) ++bad_delta;
    }
    if (static_cast<std::int64_t>(rep.mu_truncated) != mu_formula(m)) ++bad_mu;
  }
  o.expect(bad_delta == 0, std::to_string(pairs) + " classes, delta = 1 + generators fails " +
                               std::to_string(bad_delta));
  o.expect(bad_mu == 0, std::to_string(corpus.size()) + " matroids, mu2 = (b^2-b-2s)/2 fails " +
                            std::to_string(bad_mu));
  o.expect(nu_quadratic(uniform(2, 4)) == 3, "nu(U24)=" + nu_quadratic(uniform(2, 4)).str());
  o.expect(nu_quadratic(m1()) == 1, "nu(M1)=" + nu_quadratic(m1()).str());
  o.expect(nu_quadratic(t163544()) == 16, "nu(T)=" + nu_quadratic(t163544()).str());
  scan_clean(o, ScanCheck::kUniqueness, 7);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "height values", 1, heights},
      {2, "CI classification, n <= 7, D = 4", 300, ci_classification},
      {3, "binary criterion, n <= 7",
       600, [](Outcome& o) { scan_clean(o, ScanCheck::kBinaryVsMinor, 7); }},
      {4, "U(3,6) criterion, n <= 7 + 50 rank-4 n=8", 1200, u36},
      {5, "enumeration counts (6,3) and (8,4)", 7200, enumeration_counts},
      {6, "rank-4 n=8 classes with 20 bases-cobases", 7200, rank4_nonexistence},
      {7, "d=5 direct-sum counterexample", 60, d5},
      {8, "delta bounds and cobase bridge, n <= 7", 600, delta_laws},
      {9, "generator laws", 900, generator_laws},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_seconds) o.expect(false, "over time limit");
    failures += !o.pass;
    std::printf("%s  %d. %s | %s | %.2f s (limit %.0f s, tolerance 0)\n", o.pass ? "PASS" : "FAIL",
                c.id, c.title, o.detail.str().c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
