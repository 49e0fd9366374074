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

#ifndef MTORIC_SERIALIZE_HPP_
#define MTORIC_SERIALIZE_HPP_

#include <vector>

#include "json.hpp"
#include "mtoric/fibers.hpp"
#include "mtoric/matroid.hpp"
#include "mtoric/minors.hpp"
#include "mtoric/scan.hpp"
#include "mtoric/toric.hpp"

namespace mtoric {

using Json = nlohmann::ordered_json;

// One census row: {degree_vector, delta, representative_pair}.
struct CensusEntry {
  DegreeVector degree;
  std::size_t delta = 0;
  BasePair representative;
  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

std::vector<CensusEntry> census_entries(const std::vector<PairClass>& census);
Json census_to_json(const std::vector<CensusEntry>& census);
std::vector<CensusEntry> census_from_json(const Json& j);

// {delete, contract, iso}, all 1-based.
Json witness_to_json(const MinorWitness& w);
MinorWitness witness_from_json(const Json& j);

// {degree_bound, mu_truncated, generators:[{plus, minus}], fibers:[...]};
// monomials are lists of bases, bases are lists of elements.
Json report_to_json(const GeneratorReport& report);
// Monomials are resolved against the bases of m.
GeneratorReport report_from_json(const Json& j, const Matroid& m);

Json scan_to_json(const ScanReport& report);

}  // namespace mtoric

#endif  // MTORIC_SERIALIZE_HPP_
