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

#include "mtoric/serialize.hpp"

#include <algorithm>

#include "mtoric/io.hpp"

namespace mtoric {
namespace {

Json degree_json(const DegreeVector& d) {
  Json out = Json::array();
  for (auto c : d.counts) out.push_back(static_cast<int>(c));
  return out;
}

DegreeVector degree_from(const Json& j) {
  DegreeVector d;
  for (const auto& c : j) d.counts.push_back(static_cast<std::uint8_t>(c.get<int>()));
  return d;
}

Mask mask_from(const Json& j) { return mask_of(j.get<std::vector<int>>()); }

Json monomial_json(const Monomial& mono, const std::vector<Mask>& bases) {
  Json out = Json::array();
  for (auto idx : mono) out.push_back(to_elements(bases.at(idx)));
  return out;
}

Monomial monomial_from(const Json& j, const std::vector<Mask>& bases) {
  Monomial mono;
  for (const auto& b : j) {
    const Mask mask = mask_from(b);
    auto it = std::lower_bound(bases.begin(), bases.end(), mask);
    if (it == bases.end() || *it != mask) {
      throw MatroidError(ErrorCode::kNotABase, "generator uses a subset that is not a base");
    }
    mono.push_back(static_cast<std::uint32_t>(it - bases.begin()));
  }
  std::sort(mono.begin(), mono.end());
  return mono;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw MatroidError(ErrorCode::kParseError, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::vector<CensusEntry> census_entries(const std::vector<PairClass>& census) {
  std::vector<CensusEntry> out;
  out.reserve(census.size());
  for (const PairClass& c : census) out.push_back({c.key, c.delta(), c.members.front()});
  return out;
}

Json census_to_json(const std::vector<CensusEntry>& census) {
  Json out = Json::array();
  for (const CensusEntry& c : census) {
    out.push_back({{"degree_vector", degree_json(c.degree)},
                   {"delta", c.delta},
                   {"representative_pair",
                    {to_elements(c.representative.first), to_elements(c.representative.second)}}});
  }
  return out;
}

std::vector<CensusEntry> census_from_json(const Json& j) {
  return guarded([&] {
    std::vector<CensusEntry> out;
    for (const auto& row : j) {
      const auto& pair = row.at("representative_pair");
      out.push_back({degree_from(row.at("degree_vector")), row.at("delta").get<std::size_t>(),
                     BasePair{mask_from(pair.at(0)), mask_from(pair.at(1))}});
    }
    return out;
  });
}

Json witness_to_json(const MinorWitness& w) {
  return {{"delete", w.deleted.elements()},
          {"contract", w.contracted.elements()},
          {"iso", w.iso}};
}

MinorWitness witness_from_json(const Json& j) {
  return guarded([&] {
    return MinorWitness{GroundSubset{mask_from(j.at("delete"))},
                        GroundSubset{mask_from(j.at("contract"))},
                        j.at("iso").get<std::vector<int>>()};
  });
}

Json report_to_json(const GeneratorReport& report) {
  Json gens = Json::array();
  for (const Binomial& g : report.generators) {
    gens.push_back({{"plus", monomial_json(g.plus, report.bases)},
                    {"minus", monomial_json(g.minus, report.bases)}});
  }
  Json fibers = Json::array();
  for (const FiberSummary& f : report.fibers) {
    fibers.push_back(
        {{"degree_vector", degree_json(f.degree)}, {"size", f.size}, {"components", f.components}});
  }
  return {{"degree_bound", report.degree_bound},
          {"mu_truncated", report.mu_truncated},
          {"generators", std::move(gens)},
          {"fibers", std::move(fibers)}};
}

GeneratorReport report_from_json(const Json& j, const Matroid& m) {
  return guarded([&] {
    GeneratorReport r;
    r.bases.assign(m.bases().begin(), m.bases().end());
    r.degree_bound = j.at("degree_bound").get<int>();
    r.mu_truncated = j.at("mu_truncated").get<std::uint64_t>();
    r.quadratic_layer_complete = r.degree_bound >= 2;
    for (const auto& g : j.at("generators")) {
      r.generators.push_back({monomial_from(g.at("plus"), r.bases),
                              monomial_from(g.at("minus"), r.bases)});
    }
    for (const auto& f : j.at("fibers")) {
      r.fibers.push_back({degree_from(f.at("degree_vector")), f.at("size").get<std::size_t>(),
                          f.at("components").get<std::size_t>()});
    }
    return r;
  });
}

Json scan_to_json(const ScanReport& report) {
  auto findings = [](const std::vector<ScanFinding>& list) {
    Json out = Json::array();
    for (const ScanFinding& f : list) {
      out.push_back({{"n", f.matroid.size()},
                     {"r", f.matroid.rank()},
                     {"bits", format_bitstring(f.matroid)},
                     {"detail", f.detail}});
    }
    return out;
  };
  return {{"check", std::string(scan_check_name(report.check))},
          {"n_max", report.n_max},
          {"examined", report.examined},
          {"skipped", report.skipped},
          {"passed", report.passed},
          {"counterexamples", findings(report.counterexamples)},
          {"flagged", findings(report.flagged)}};
}

}  // namespace mtoric
