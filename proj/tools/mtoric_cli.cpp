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

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtoric/atlas.hpp"
#include "mtoric/fibers.hpp"
#include "mtoric/io.hpp"
#include "mtoric/matroid.hpp"
#include "mtoric/minors.hpp"
#include "mtoric/scan.hpp"
#include "mtoric/serialize.hpp"
#include "mtoric/toric.hpp"

namespace {

using namespace mtoric;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Globals {
  unsigned threads = 0;
  std::string subset_order = "lex";
};

SubsetOrder order_of(const Globals& g) {
  return g.subset_order == "colex" ? SubsetOrder::kColex : SubsetOrder::kLex;
}

std::string set_text(Mask m) {
  std::string s = "{";
  for (int e : to_elements(m)) s += (s.size() > 1 ? "," : "") + std::to_string(e);
  return s + "}";
}

std::string elements_text(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string monomial_text(const Monomial& mono, const std::vector<Mask>& bases) {
  std::string s;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    s += i ? "*y" : "y";
    for (int e : to_elements(bases[mono[i]])) s += std::to_string(e);
  }
  return s;
}

// "1 2;3 4" -> two masks.
std::pair<Mask, Mask> parse_pair(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) {
    throw MatroidError(ErrorCode::kParseError, "pair must look like \"1 2;3 4\"");
  }
  auto side = [](const std::string& s) {
    std::istringstream in(s);
    std::vector<int> v;
    for (int x; in >> x;) v.push_back(x);
    if (!in.eof()) throw MatroidError(ErrorCode::kParseError, "bad element in pair: " + s);
    return mask_of(v);
  };
  return {side(text.substr(0, semi)), side(text.substr(semi + 1))};
}

// "uniform:R,N"
Matroid parse_target(const std::string& text) {
  unsigned r = 0, n = 0;
  char comma = 0;
  std::istringstream in(text.rfind("uniform:", 0) == 0 ? text.substr(8) : std::string{});
  if (!(in >> r >> comma >> n) || comma != ',' || !(in >> std::ws).eof()) {
    throw MatroidError(ErrorCode::kParseError, "target must look like uniform:R,N");
  }
  return uniform(static_cast<int>(r), static_cast<int>(n));
}

std::string default_cache_path() {
  const char* dir = std::getenv("MTORIC_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / "classes.txt").string();
}

int cmd_validate(const std::string& file, const Globals& g) {
  try {
    const Matroid m = read_matroid_file(file, order_of(g));
    std::cout << "valid matroid: n=" << m.size() << " r=" << m.rank()
              << " bases=" << m.num_bases() << "\n";
    return kExitOk;
  } catch (const ExchangeAxiomError& e) {
    const ExchangeViolation& v = e.violation();
    std::cout << "invalid: exchange fails for " << set_text(v.first) << ", "
              << set_text(v.second) << " at element " << v.element << "\n";
    return kExitInput;
  }
}

int cmd_info(const std::string& file, bool json, const Globals& g) {
  const Matroid m = read_matroid_file(file, order_of(g));
  const Components c = connected_components(m);
  const GroundSubset lp = loops(m), cl = coloops(m);
  const int diameter = basis_graph_diameter(m);
  const std::uint64_t bc = bases_cobases(m);
  if (json) {
    Json parts = Json::array();
    for (const auto& p : c.parts) parts.push_back(p.elements());
    std::cout << Json{{"n", m.size()},       {"r", m.rank()},
                      {"bases", m.num_bases()}, {"components", c.count},
                      {"parts", parts},      {"loops", lp.elements()},
                      {"coloops", cl.elements()}, {"height", height(m)},
                      {"diameter", diameter}, {"bases_cobases", bc}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  std::cout << "n " << m.size() << "\nr " << m.rank() << "\nbases " << m.num_bases()
            << "\ncomponents " << c.count << "\nloops " << elements_text(lp.elements())
            << "\ncoloops " << elements_text(cl.elements()) << "\nheight " << height(m)
            << "\ndiameter " << diameter << "\nbases-cobases " << bc << "\n";
  return kExitOk;
}

int cmd_delta(const std::string& file, const std::string& pair, bool census, bool json,
              const Globals& g) {
  const Matroid m = read_matroid_file(file, order_of(g));
  if (!pair.empty()) {
    const auto [b1, b2] = parse_pair(pair);
    const PairClass cls = pair_class(m, b1, b2);
    if (json) {
      std::cout << census_to_json(census_entries({cls})).dump(2) << "\n";
    } else {
      std::cout << "delta " << cls.delta() << "\n";
      for (const BasePair& p : cls.members) {
        std::cout << "  " << set_text(p.first) << " " << set_text(p.second) << "\n";
      }
    }
    if (!census) return kExitOk;
  }
  const auto classes = class_census(m);
  if (json) {
    std::cout << census_to_json(census_entries(classes)).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << classes.size() << " classes\n";
  for (const PairClass& c : classes) {
    std::cout << "  delta " << c.delta() << "  " << set_text(c.members.front().first) << " "
              << set_text(c.members.front().second) << "\n";
  }
  return kExitOk;
}

int cmd_markov(const std::string& file, int max_degree, std::uint64_t cap, bool json,
               const Globals& g) {
  const Matroid m = read_matroid_file(file, order_of(g));
  const GeneratorReport r = markov_basis(m, max_degree, cap);
  if (json) {
    std::cout << report_to_json(r).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << r.generators.size() << " generators up to degree " << r.degree_bound << "\n";
  for (const Binomial& b : r.generators) {
    std::cout << "  " << monomial_text(b.plus, r.bases) << " - "
              << monomial_text(b.minus, r.bases) << "\n";
  }
  std::cout << "height " << height(m) << "\n";
  return kExitOk;
}

int cmd_check(const std::string& file, const std::string& property, int max_degree,
              const Globals& g) {
  const Matroid m = read_matroid_file(file, order_of(g));
  auto answer = [](bool v, const std::string& note = {}) {
    std::cout << (v ? "true" : "false") << (note.empty() ? "" : " (" + note + ")") << "\n";
    return v ? kExitOk : kExitFalse;
  };
  if (property == "binary") return answer(is_binary(m));
  if (property == "u36") return answer(has_u36_minor(m), "U(3,6) minor");
  if (property == "unique") {
    const UniquenessVerdict v = unique_generating_set(m);
    if (v.kind == UniquenessVerdict::Kind::kTriviallyUnique) return answer(true, "rank <= 1");
    return answer(v.unique(), std::string("binary ") + (v.binary ? "yes" : "no") +
                                  ", diameter " + std::to_string(v.diameter));
  }
  if (property == "sbo") {
    const SboReport r = strongly_base_orderable(m);
    if (r.holds) return answer(true);
    return answer(false, "fails for " + set_text(r.failing_pair->first) + " " +
                             set_text(r.failing_pair->second));
  }
  const CiVerdict v = is_complete_intersection(m, max_degree);
  const std::string counts = "mu " + std::to_string(v.mu_truncated) + ", height " +
                             std::to_string(v.height) + ", degree " +
                             std::to_string(v.degree_bound);
  switch (v.kind) {
    case CiVerdict::Kind::kZeroIdeal:
      return answer(true, "zero ideal");
    case CiVerdict::Kind::kUpToDegree:
      return answer(true, "up to degree " + std::to_string(v.degree_bound) + "; " + counts);
    case CiVerdict::Kind::kNotCi:
      return answer(false, counts);
    case CiVerdict::Kind::kInconclusive:
      std::cout << "inconclusive (" << counts << ")\n";
      return kExitBudget;
  }
  return kExitOk;
}

void print_classes(const std::vector<Matroid>& classes) {
  for (const Matroid& m : classes) {
    std::cout << m.size() << " " << m.rank() << " " << format_bitstring(m) << "\n";
  }
}

int cmd_enumerate(int n, int r, bool count_only, std::string cache, const std::string& regime,
                  const Globals& g) {
  EnumerateOptions opt;
  opt.threads = g.threads;
  opt.cache_path = cache.empty() ? default_cache_path() : cache;
  if (regime == "naive") opt.regime = Regime::kNaive;
  if (regime == "augmented") opt.regime = Regime::kAugmented;
  const std::vector<Matroid> classes = enumerate(n, r, opt);
  if (count_only) {
    std::cout << classes.size() << "\n";
  } else {
    print_classes(classes);
  }
  return kExitOk;
}

int cmd_search(int n, int r, std::uint64_t k, const Globals& g) {
  EnumerateOptions opt;
  opt.threads = g.threads;
  opt.cache_path = default_cache_path();
  const std::vector<Matroid> found = search_bases_cobases(n, r, k, opt);
  std::cout << found.size() << " classes with " << k << " bases-cobases\n";
  print_classes(found);
  return found.empty() ? kExitFalse : kExitOk;
}

int cmd_d5(bool json) {
  const D5Counterexample d = build_d5_counterexample();
  const ConnectedMinorCertificate& c = d.certificate;
  if (json) {
    std::cout << Json{{"n", d.matroid.size()},
                      {"r", d.matroid.rank()},
                      {"part14", format_bitstring(d.part14)},
                      {"part18", format_bitstring(d.part18)},
                      {"bases_cobases", d.bases_cobases},
                      {"pair", {to_elements(d.base), to_elements(d.complement)}},
                      {"delta", d.delta},
                      {"minor_candidates", c.candidates},
                      {"rank5_candidates", c.matching_rank},
                      {"connected_candidates", c.connected},
                      {"u510_minor", !c.excludes_connected_minor()}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  std::cout << "direct sum of rank-3 matroids on 6 elements with 14 and 18 bases-cobases\n"
            << "  part14 " << format_bitstring(d.part14) << "\n"
            << "  part18 " << format_bitstring(d.part18) << "\n"
            << "bases-cobases " << d.bases_cobases << "\n"
            << "delta " << d.delta << " for " << set_text(d.base) << " "
            << set_text(d.complement) << "\n"
            << "rank-5 minors on 10 elements: " << c.matching_rank << " of " << c.candidates
            << " candidates, " << c.connected << " connected\n"
            << "U(5,10) minor: " << (c.excludes_connected_minor() ? "none" : "possible") << "\n";
  return kExitOk;
}

int cmd_minor(const std::string& file, const std::string& target, bool json, const Globals& g) {
  const Matroid m = read_matroid_file(file, order_of(g));
  const Matroid t = parse_target(target);
  const auto w = t.size() <= m.size() ? has_minor(m, t) : std::nullopt;
  if (json) {
    std::cout << (w ? witness_to_json(*w) : Json(nullptr)).dump(2) << "\n";
  } else if (w) {
    std::cout << "minor found: delete " << elements_text(w->deleted.elements()) << " contract "
              << elements_text(w->contracted.elements()) << " iso " << elements_text(w->iso)
              << "\n";
  } else {
    std::cout << "no minor\n";
  }
  return w ? kExitOk : kExitFalse;
}

int cmd_scan(int n_max, const std::string& check, std::optional<int> rank, int max_degree,
             bool json, const Globals& g) {
  const auto c = parse_scan_check(check);
  if (!c) throw MatroidError(ErrorCode::kInvalidArgument, "unknown check: " + check);
  ScanOptions opt;
  opt.rank = rank;
  opt.degree_bound = max_degree;
  opt.enumerate.threads = g.threads;
  opt.enumerate.cache_path = default_cache_path();
  const ScanReport r = scan(n_max, *c, opt);
  if (json) {
    std::cout << scan_to_json(r).dump(2) << "\n";
  } else {
    std::cout << check << ": examined " << r.examined << ", passed " << r.passed
              << ", counterexamples " << r.counterexamples.size() << ", skipped " << r.skipped
              << "\n";
    for (const ScanFinding& f : r.flagged) {
      std::cout << "  flagged " << f.matroid.size() << " " << f.matroid.rank() << " "
                << format_bitstring(f.matroid) << "\n";
    }
    for (const ScanFinding& f : r.counterexamples) {
      std::cout << "  counterexample " << f.matroid.size() << " " << f.matroid.rank() << " "
                << format_bitstring(f.matroid) << ": " << f.detail << "\n";
    }
  }
  return r.clean() ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid toric ideal toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (0: all cores)");
  app.add_option("--subset-order", g.subset_order, "Subset order of bitstring input")
      ->check(CLI::IsMember({"lex", "colex"}));

  std::function<int()> action;
  std::string file, pair, property = "binary", target, cache, regime = "auto", check;
  bool census = false, json = false, count_only = false;
  int max_degree = kDefaultDegreeBound, n = 0, r = 0, n_max = 7;
  std::optional<int> rank;
  std::uint64_t cap = kDefaultFiberCap, k = 0;

  auto* validate = app.add_subcommand("validate", "Check the base exchange axiom");
  validate->add_option("file", file)->required();
  validate->callback([&] { action = [&] { return cmd_validate(file, g); }; });

  auto* info = app.add_subcommand("info", "Size, rank, connectivity, height, diameter");
  info->add_option("file", file)->required();
  info->add_flag("--json", json);
  info->callback([&] { action = [&] { return cmd_info(file, json, g); }; });

  auto* delta = app.add_subcommand("delta", "Pair classes and their sizes");
  delta->add_option("file", file)->required();
  delta->add_option("--pair", pair, "Two bases, e.g. \"1 2;3 4\"");
  delta->add_flag("--census", census, "List every class");
  delta->add_flag("--json", json);
  delta->callback([&] { action = [&] { return cmd_delta(file, pair, census, json, g); }; });

  auto* markov = app.add_subcommand("markov", "Minimal binomial generators up to a degree");
  markov->add_option("file", file)->required();
  markov->add_option("--max-degree", max_degree)->check(CLI::Range(2, 15));
  markov->add_option("--fiber-cap", cap);
  markov->add_flag("--json", json);
  markov->callback([&] { action = [&] { return cmd_markov(file, max_degree, cap, json, g); }; });

  auto* chk = app.add_subcommand("check", "Test a property; exit 1 when false");
  chk->add_option("file", file)->required();
  chk->add_option("--property", property)
      ->required()
      ->check(CLI::IsMember({"binary", "u36", "ci", "unique", "sbo"}));
  chk->add_option("--max-degree", max_degree)->check(CLI::Range(2, 15));
  chk->callback([&] { action = [&] { return cmd_check(file, property, max_degree, g); }; });

  auto* en = app.add_subcommand("enumerate", "Isomorphism classes of rank-r matroids on n elements");
  en->add_option("-n", n)->required();
  en->add_option("-r", r)->required();
  en->add_flag("--count-only", count_only);
  en->add_option("--cache", cache, "Class cache file");
  en->add_option("--regime", regime)->check(CLI::IsMember({"auto", "naive", "augmented"}));
  en->callback([&] { action = [&] { return cmd_enumerate(n, r, count_only, cache, regime, g); }; });

  auto* search = app.add_subcommand("search", "Classes with a given number of bases-cobases");
  search->add_option("-n", n)->required();
  search->add_option("-r", r)->required();
  search->add_option("--bases-cobases", k)->required();
  search->callback([&] { action = [&] { return cmd_search(n, r, k, g); }; });

  auto* d5 = app.add_subcommand("counterexample-d5", "Rebuild the rank-6 direct-sum example");
  d5->add_flag("--json", json);
  d5->callback([&] { action = [&] { return cmd_d5(json); }; });

  auto* mn = app.add_subcommand("minor", "Search for a uniform minor");
  mn->add_option("file", file)->required();
  mn->add_option("--target", target, "uniform:R,N")->required();
  mn->add_flag("--json", json);
  mn->callback([&] { action = [&] { return cmd_minor(file, target, json, g); }; });

  auto* sc = app.add_subcommand("scan", "Run a registered check over all small classes");
  sc->add_option("--n-max", n_max);
  sc->add_option("--check", check)->required();
  sc->add_option("--rank", rank);
  sc->add_option("--max-degree", max_degree)->check(CLI::Range(2, 15));
  sc->add_flag("--json", json);
  sc->callback([&] { action = [&] { return cmd_scan(n_max, check, rank, max_degree, json, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  try {
    return action();
  } catch (const MatroidError& e) {
    std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
    return e.is_budget_error() ? kExitBudget : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
