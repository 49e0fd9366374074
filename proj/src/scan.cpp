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

#include "mtoric/scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "mtoric/fibers.hpp"
#include "mtoric/minors.hpp"
#include "mtoric/toric.hpp"

namespace mtoric {
namespace {

constexpr std::array<std::pair<ScanCheck, std::string_view>, 7> kCheckNames{{
    {ScanCheck::kBinaryVsMinor, "binary-vs-minor"},
    {ScanCheck::kU36VsDelta, "u36-vs-delta"},
    {ScanCheck::kCiClassification, "ci-classification"},
    {ScanCheck::kUniqueness, "uniqueness"},
    {ScanCheck::kDeltaBounds, "delta-bounds"},
    {ScanCheck::kCobaseBridge, "cobase-bridge"},
    {ScanCheck::kCiHeredity, "ci-heredity"},
}};

std::string pair_text(Mask a, Mask b) {
  auto side = [](Mask x) {
    std::string s = "{";
    for (int e : to_elements(x)) s += (s.size() > 1 ? "," : "") + std::to_string(e);
    return s + "}";
  };
  return side(a) + " " + side(b);
}

CheckOutcome minor_equivalence(const Matroid& m, bool by_delta, int r, int n,
                               const char* label) {
  CheckOutcome out;
  const bool found = m.size() >= n && has_minor(m, uniform(r, n)).has_value();
  if (by_delta != found) {
    out.holds = false;
    out.detail = std::string(by_delta ? "delta criterion met" : "delta criterion not met") +
                 (found ? ", " : ", no ") + label + " minor";
  }
  return out;
}

bool loop_coloop_free(const Matroid& m) {
  return loops(m).mask == 0 && coloops(m).mask == 0;
}

CheckOutcome ci_classification(const Matroid& m, int degree_bound) {
  CheckOutcome out;
  if (!loop_coloop_free(m) || m.rank() < 2 || m.rank() > m.size() - 2) {
    out.applicable = false;
    return out;
  }
  const CiVerdict v = is_complete_intersection(m, degree_bound);
  out.flagged = v.complete_intersection();
  if (v.kind == CiVerdict::Kind::kInconclusive) {
    out.holds = false;
    out.detail = "inconclusive at degree " + std::to_string(v.degree_bound);
  } else if (out.flagged && m.size() != 4) {
    out.holds = false;
    out.detail = "complete intersection with n = " + std::to_string(m.size());
  }
  return out;
}

CheckOutcome uniqueness(const Matroid& m) {
  CheckOutcome out;
  if (m.rank() < 2 || !is_quadratically_generated(m, 3).quadratic) {
    out.applicable = false;
    return out;
  }
  const bool nu_one = nu_quadratic(m) == 1;
  const UniquenessVerdict v = unique_generating_set(m);
  if (nu_one != v.unique()) {
    out.holds = false;
    out.detail = "nu " + std::string(nu_one ? "= 1" : "> 1") + ", binary " +
                 (v.binary ? "yes" : "no") + ", diameter " + std::to_string(v.diameter);
  }
  return out;
}

CheckOutcome delta_bounds(const Matroid& m) {
  CheckOutcome out;
  const DeltaBoundsReport report = delta_bounds_check(m);
  if (!report.holds) {
    const auto& v = report.violations.front();
    out.holds = false;
    out.detail = "pair " + pair_text(v.pair.first, v.pair.second) + " has delta " +
                 std::to_string(v.delta);
  }
  return out;
}

CheckOutcome cobase_bridges(const Matroid& m) {
  CheckOutcome out;
  for (const PairClass& cls : class_census(m)) {
    for (const BasePair& p : cls.members) {
      const std::uint64_t got = cobase_bridge(m, p.first, p.second).bases_cobases;
      if (got != 2 * cls.delta()) {
        out.holds = false;
        out.detail = "pair " + pair_text(p.first, p.second) + ": " + std::to_string(got) +
                     " bases-cobases, delta " + std::to_string(cls.delta());
        return out;
      }
    }
  }
  return out;
}

CheckOutcome ci_heredity(const Matroid& m, int degree_bound) {
  CheckOutcome out;
  if (!is_complete_intersection(m, degree_bound).complete_intersection()) return out;
  out.flagged = true;
  for (int e = 1; e <= m.size(); ++e) {
    const GroundSubset s{bit(e - 1)};
    if (!is_complete_intersection(minor(m, s, GroundSubset{}).matroid, degree_bound).complete_intersection()) {
      out.holds = false;
      out.detail = "deleting " + std::to_string(e) + " is not a complete intersection";
      return out;
    }
    if (!is_complete_intersection(minor(m, GroundSubset{}, s).matroid, degree_bound)
             .complete_intersection()) {
      out.holds = false;
      out.detail = "contracting " + std::to_string(e) + " is not a complete intersection";
      return out;
    }
  }
  return out;
}

}  // namespace

std::string_view scan_check_name(ScanCheck check) {
  for (const auto& [c, name] : kCheckNames) {
    if (c == check) return name;
  }
  return "unknown";
}

std::optional<ScanCheck> parse_scan_check(std::string_view name) {
  for (const auto& [c, n] : kCheckNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

CheckOutcome apply_check(const Matroid& m, ScanCheck check, int degree_bound) {
  switch (check) {
    case ScanCheck::kBinaryVsMinor:
      return minor_equivalence(m, !is_binary(m), 2, 4, "U(2,4)");
    case ScanCheck::kU36VsDelta:
      return minor_equivalence(m, has_u36_minor(m), 3, 6, "U(3,6)");
    case ScanCheck::kCiClassification:
      return ci_classification(m, degree_bound);
    case ScanCheck::kUniqueness:
      return uniqueness(m);
    case ScanCheck::kDeltaBounds:
      return delta_bounds(m);
    case ScanCheck::kCobaseBridge:
      return cobase_bridges(m);
    case ScanCheck::kCiHeredity:
      return ci_heredity(m, degree_bound);
  }
  return {};
}

ScanReport scan(int n_max, ScanCheck check, const ScanOptions& options) {
  if (n_max > kAugmentedLimit) {
    throw MatroidError(ErrorCode::kBudgetExceeded,
                       "scan is limited to n <= " + std::to_string(kAugmentedLimit));
  }
  ScanReport report;
  report.check = check;
  report.n_max = n_max;

  std::vector<Matroid> classes;
  for (int n = 0; n <= n_max; ++n) {
    for (int r = 0; r <= n; ++r) {
      if (options.rank && *options.rank != r) continue;
      std::vector<Matroid> batch = enumerate(n, r, options.enumerate);
      classes.insert(classes.end(), batch.begin(), batch.end());
    }
  }

  std::vector<CheckOutcome> outcomes(classes.size());
  unsigned threads = options.enumerate.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, classes.size()));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < classes.size();) {
      if (failed) return;
      try {
        outcomes[i] = apply_check(classes[i], check, options.degree_bound);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const CheckOutcome& o = outcomes[i];
    if (!o.applicable) {
      ++report.skipped;
      continue;
    }
    ++report.examined;
    if (o.holds) {
      ++report.passed;
    } else {
      report.counterexamples.push_back({classes[i], o.detail});
    }
    if (o.flagged) report.flagged.push_back({classes[i], o.detail});
  }
  return report;
}

}  // namespace mtoric
