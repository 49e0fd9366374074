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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mtoric/atlas.hpp"
#include "mtoric/io.hpp"
#include "mtoric/serialize.hpp"

namespace mtoric {
namespace {

struct Invocation {
  int code = -1;
  std::string out;
};

Invocation run(const std::string& args) {
  const std::string cmd = std::string(MTORIC_CLI) + " " + args + " 2>/dev/null";
  Invocation r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(MTORIC_DATA) + "/" + name; }

TEST(Cli, BinaryCheckOnU24IsFalse) {
  const Invocation r = run("check " + data("u24.matroid") + " --property binary");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "false\n");
}

TEST(Cli, MarkovCountsNineQuadraticGenerators) {
  const Invocation r = run("markov " + data("t163544.matroid") + " --max-degree 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("9 generators", 0), 0u) << r.out;
}

TEST(Cli, EnumerateCountMatchesLibrary) {
  const Invocation r = run("enumerate -n 6 -r 3 --count-only");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, std::to_string(enumerate(6, 3).size()) + "\n");
}

TEST(Cli, EnumerateListsCacheFormat) {
  const Invocation r = run("enumerate -n 4 -r 2");
  ASSERT_EQ(r.code, 0);
  std::size_t lines = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line); ++lines) {
    EXPECT_EQ(parse_matroid(line).size(), 4);
  }
  EXPECT_EQ(lines, enumerate(4, 2).size());
}

TEST(Cli, CompleteIntersectionChecks) {
  EXPECT_EQ(run("check " + data("m1.matroid") + " --property ci").code, 0);
  const Invocation t = run("check " + data("t163544.matroid") + " --property ci");
  EXPECT_EQ(t.code, 1);
  EXPECT_EQ(t.out.rfind("false", 0), 0u);
}

TEST(Cli, OtherProperties) {
  EXPECT_EQ(run("check " + data("m1.matroid") + " --property unique").code, 0);
  EXPECT_EQ(run("check " + data("u24.matroid") + " --property unique").code, 1);
  EXPECT_EQ(run("check " + data("t163544.matroid") + " --property sbo").code, 0);
  EXPECT_EQ(run("check " + data("t163544.matroid") + " --property u36").code, 1);
}

TEST(Cli, DeltaPairAndCensus) {
  const Invocation r = run("delta " + data("u24.matroid") + " --pair \"1 2;3 4\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("delta 3\n", 0), 0u);
  const Invocation c = run("delta " + data("t163544.matroid") + " --census --json");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(census_from_json(Json::parse(c.out)).size(), 19u);
}

TEST(Cli, MarkovJsonRoundTrips) {
  const Invocation r = run("markov " + data("t163544.matroid") + " --max-degree 3 --json");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  const Matroid t = read_matroid_file(data("t163544.matroid"));
  EXPECT_EQ(report_to_json(report_from_json(j, t)), j);
  EXPECT_EQ(j["mu_truncated"], 9);
}

TEST(Cli, MinorWitnessJson) {
  const Invocation r = run("minor " + data("u24.matroid") + " --target uniform:2,4 --json");
  ASSERT_EQ(r.code, 0);
  const MinorWitness w = witness_from_json(Json::parse(r.out));
  EXPECT_EQ(w.iso, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(run("minor " + data("m1.matroid") + " --target uniform:2,4").code, 1);
  EXPECT_EQ(run("minor " + data("m1.matroid") + " --target uniform:x").code, 2);
}

TEST(Cli, CounterexampleD5) {
  const Invocation r = run("counterexample-d5 --json");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["bases_cobases"], 252);
  EXPECT_EQ(j["delta"], 126);
  EXPECT_EQ(j["u510_minor"], false);
}

TEST(Cli, SearchAndScan) {
  const Invocation s = run("search -n 6 -r 3 --bases-cobases 20");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.rfind("1 classes", 0), 0u);
  const Invocation c = run("scan --n-max 5 --check ci-classification --json");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(Json::parse(c.out)["flagged"].size(), 3u);
}

TEST(Cli, ExitCodes) {
  const auto bad = std::filesystem::temp_directory_path() / "mtoric_cli_bad.matroid";
  std::ofstream(bad) << "4 2\n1 2\n3 4\n";
  const Invocation v = run("validate " + bad.string());
  EXPECT_EQ(v.code, 2);
  EXPECT_NE(v.out.find("exchange"), std::string::npos);
  std::filesystem::remove(bad);
  EXPECT_EQ(run("validate " + data("m1.matroid")).code, 0);
  EXPECT_EQ(run("validate /nonexistent/file").code, 2);
  EXPECT_EQ(run("enumerate -n 9 -r 4 --count-only").code, 3);
  EXPECT_EQ(run("markov " + data("t163544.matroid") + " --max-degree 4 --fiber-cap 10").code, 3);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, BitstringInputOrders) {
  const auto file = std::filesystem::temp_directory_path() / "mtoric_cli_colex.matroid";
  std::ofstream(file) << "4 2 110111\n";
  // Lex reads 12 13 23 24 34; colex reads 12 13 14 24 34.
  const Invocation lex = run("delta " + file.string() + " --pair \"1 4;2 3\"");
  const Invocation colex = run("--subset-order colex delta " + file.string() + " --pair \"1 4;2 3\"");
  EXPECT_EQ(lex.code, 2);
  EXPECT_EQ(colex.code, 2);
  EXPECT_EQ(run("delta " + file.string() + " --pair \"2 3;1 4\"").code, 2);
  EXPECT_EQ(run("--subset-order colex delta " + file.string() + " --pair \"1 4;1 3\"").code, 0);
  EXPECT_EQ(run("delta " + file.string() + " --pair \"2 3;1 3\"").code, 0);
  std::filesystem::remove(file);
}

TEST(Cli, CacheDirectoryFromEnvironment) {
  const auto dir = std::filesystem::temp_directory_path() / "mtoric_cli_cache";
  std::filesystem::remove_all(dir);

  const std::string cmd = "MTORIC_CACHE_DIR=" + dir.string() + " " + MTORIC_CLI +
                          " enumerate -n 5 -r 2 --count-only > /dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  const auto cached = load_class_cache((dir / "classes.txt").string(), 5, 2);
  EXPECT_EQ(cached.size(), 13u);
  std::filesystem::remove_all(dir);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> invocations{
      "enumerate -n 6 -r 3", "markov " + data("u24.matroid") + " --max-degree 3 --json",
      "delta " + data("t163544.matroid") + " --census"};
  for (const std::string& args : invocations) {
    EXPECT_EQ(run(args).out, run("--threads 1 " + args).out);
  }
}

}  // namespace
}  // namespace mtoric
