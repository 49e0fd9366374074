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

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "mtoric/io.hpp"
#include "mtoric/serialize.hpp"

namespace mtoric {
namespace {

TEST(TextFormat, ParsesCommentsAndBlankLines) {
  const Matroid m = parse_text("# M1\n4 2\n\n1 2\n3 4  # trailing\n1 3\n2 4\n");
  EXPECT_EQ(m, testing::m1());
}

TEST(TextFormat, RoundTrip) {
  for (const Matroid& m : testing::all_classes(5)) {
    ASSERT_EQ(parse_text(format_text(m)), m);
  }
}

TEST(TextFormat, RankZeroMayListNoBases) {
  EXPECT_EQ(parse_text("3 0\n"), uniform(0, 3));
}

TEST(TextFormat, Errors) {
  auto code = [](const char* text) {
    try {
      parse_text(text);
    } catch (const MatroidError& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code(""), ErrorCode::kParseError);
  EXPECT_EQ(code("4 x\n"), ErrorCode::kParseError);
  EXPECT_EQ(code("4 2\n1 a\n"), ErrorCode::kParseError);
  EXPECT_EQ(code("4 2\n1 2 3\n"), ErrorCode::kNotEquicardinal);
  EXPECT_EQ(code("4 2\n1 2\n3 4\n"), ErrorCode::kExchangeAxiomViolated);
  EXPECT_EQ(code("4 2\n1 5\n"), ErrorCode::kParseError);
}

TEST(Bitstring, LexAndColexOrders) {
  // r-subsets of {1..4}, r = 2. Lex: 12 13 14 23 24 34. Colex: 12 13 23 14 24 34.
  const Matroid m2 = testing::m2();
  EXPECT_EQ(format_bitstring(m2, SubsetOrder::kLex), "111011");
  EXPECT_EQ(format_bitstring(m2, SubsetOrder::kColex), "110111");
  EXPECT_EQ(parse_bitstring(4, 2, "111011", SubsetOrder::kLex), m2);
  EXPECT_EQ(parse_bitstring(4, 2, "110111", SubsetOrder::kColex), m2);
  EXPECT_THROW(parse_bitstring(4, 2, "11001"), MatroidError);
  EXPECT_THROW(parse_bitstring(4, 2, "11001x"), MatroidError);
}

TEST(Bitstring, RoundTripBothOrders) {
  for (const Matroid& m : testing::all_classes(6)) {
    for (SubsetOrder o : {SubsetOrder::kLex, SubsetOrder::kColex}) {
      ASSERT_EQ(parse_bitstring(m.size(), m.rank(), format_bitstring(m, o), o), m);
    }
  }
}

TEST(ParseMatroid, DetectsFormat) {
  EXPECT_EQ(parse_matroid("4 2 110011\n"), testing::m1());
  EXPECT_EQ(parse_matroid("# header\n4 2 110111\n", SubsetOrder::kColex), testing::m2());
  EXPECT_EQ(parse_matroid("4 2\n1 2\n3 4\n1 3\n2 4\n"), testing::m1());
}

TEST(Json, CensusRoundTrip) {
  const auto entries = census_entries(class_census(testing::t163544()));
  const Json j = census_to_json(entries);
  ASSERT_EQ(j.size(), 19u);
  EXPECT_TRUE(j[0].contains("degree_vector"));
  EXPECT_TRUE(j[0].contains("delta"));
  EXPECT_EQ(j[0]["representative_pair"].size(), 2u);
  EXPECT_EQ(census_from_json(j), entries);
  EXPECT_EQ(census_to_json(census_from_json(Json::parse(j.dump()))), j);
}

TEST(Json, WitnessRoundTrip) {
  const auto w = has_minor(uniform(3, 6), uniform(2, 4));
  ASSERT_TRUE(w.has_value());
  const Json j = witness_to_json(*w);
  EXPECT_EQ(j["delete"].size(), 1u);
  EXPECT_EQ(j["contract"].size(), 1u);
  EXPECT_EQ(j["iso"].size(), 4u);
  const MinorWitness back = witness_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.deleted.mask, w->deleted.mask);
  EXPECT_EQ(back.contracted.mask, w->contracted.mask);
  EXPECT_EQ(back.iso, w->iso);
  EXPECT_TRUE(witness_reproduces(uniform(3, 6), uniform(2, 4), back));
}

TEST(Json, ReportRoundTrip) {
  for (const Matroid& m : testing::named_corpus()) {
    const GeneratorReport r = markov_basis(m, 3);
    const Json j = report_to_json(r);
    EXPECT_EQ(j["degree_bound"], 3);
    EXPECT_EQ(j["mu_truncated"], r.mu_truncated);
    EXPECT_EQ(j["generators"].size(), r.generators.size());
    EXPECT_EQ(j["fibers"].size(), r.fibers.size());
    const GeneratorReport back = report_from_json(Json::parse(j.dump()), m);
    EXPECT_EQ(back.generators, r.generators);
    EXPECT_EQ(report_to_json(back), j);
  }
}

TEST(Json, ReportLayout) {
  const Json j = report_to_json(markov_basis(testing::m1(), 2));
  const Json expected = Json::parse(R"({
    "degree_bound": 2,
    "mu_truncated": 1,
    "generators": [{"plus": [[1, 2], [3, 4]], "minus": [[1, 3], [2, 4]]}],
    "fibers": [{"degree_vector": [1, 1, 1, 1], "size": 2, "components": 2}]
  })");
  EXPECT_EQ(j, expected);
}

TEST(Json, MalformedInputIsParseError) {
  try {
    witness_from_json(Json::parse(R"({"delete": [1]})"));
    FAIL();
  } catch (const MatroidError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
  const Json bad = Json::parse(
      R"({"degree_bound":2,"mu_truncated":1,"generators":[{"plus":[[1,4],[2,3]],"minus":[[1,2],[3,4]]}],"fibers":[]})");
  EXPECT_THROW(report_from_json(bad, testing::m1()), MatroidError);
}

}  // namespace
}  // namespace mtoric
