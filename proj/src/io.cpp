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

#include "mtoric/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace mtoric {
namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw MatroidError(ErrorCode::kParseError,
                     "line " + std::to_string(line) + ": " + what);
}

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
    line.remove_suffix(1);
  }
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
    line.remove_prefix(1);
  }
  return line;
}

std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::string_view body = strip_comment(line);
    if (!body.empty()) out.emplace_back(no, std::string(body));
  }
  return out;
}

std::vector<long long> integers(int line_no, const std::string& body) {
  std::istringstream in(body);
  std::vector<long long> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      parse_error(line_no, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) parse_error(line_no, "expected an integer, got '" + token + "'");
    out.push_back(v);
  }
  return out;
}

bool is_bitstring_header(const std::string& body) {
  std::istringstream in(body);
  std::string a, b, c, extra;
  if (!(in >> a >> b >> c) || (in >> extra)) return false;
  auto digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  auto binary = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char ch) { return ch == '0' || ch == '1'; });
  };
  return digits(a) && digits(b) && binary(c);
}

}  // namespace

std::vector<Mask> ordered_subsets(int n, int r, SubsetOrder order) {
  std::vector<Mask> subsets;
  for_each_k_subset(n, r, [&](Mask s) { subsets.push_back(s); });
  if (order == SubsetOrder::kLex) {
    auto key = [](Mask s) { return to_elements(s); };
    std::sort(subsets.begin(), subsets.end(), [&](Mask a, Mask b) { return key(a) < key(b); });
  }
  return subsets;
}

Matroid parse_text(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) parse_error(0, "missing 'n r' header");
  const auto header = integers(lines[0].first, lines[0].second);
  if (header.size() != 2) parse_error(lines[0].first, "header must be 'n r'");
  if (header[0] < 0 || header[0] > kMaxGroundSet) {
    parse_error(lines[0].first, "n must be in [0, 64]");
  }
  const int n = static_cast<int>(header[0]);
  const int r = static_cast<int>(header[1]);
  std::vector<std::vector<int>> bases;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<int> base;
    for (long long v : integers(lines[i].first, lines[i].second)) {
      if (v < 1 || v > n) {
        parse_error(lines[i].first, "element " + std::to_string(v) + " not in {1.." +
                                        std::to_string(n) + "}");
      }
      base.push_back(static_cast<int>(v));
    }
    bases.push_back(std::move(base));
  }
  if (bases.empty() && r == 0) bases.emplace_back();
  if (bases.empty()) parse_error(lines.back().first, "no bases listed");
  return Matroid::from_bases(n, r, bases);
}

std::string format_text(const Matroid& m) {
  std::ostringstream out;
  out << m.size() << ' ' << m.rank() << '\n';
  if (m.rank() == 0) return out.str();
  for (Mask b : m.bases()) {
    bool first = true;
    for (int e : to_elements(b)) {
      out << (first ? "" : " ") << e;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Matroid parse_bitstring(int n, int r, std::string_view bits, SubsetOrder order) {
  if (n < 0 || n > kMaxGroundSet || r < 0 || r > n) {
    throw MatroidError(ErrorCode::kParseError, "invalid n/r in bitstring header");
  }
  if (binomial(n, r) != bits.size()) {
    throw MatroidError(ErrorCode::kParseError,
                       "bitstring has " + std::to_string(bits.size()) + " characters, expected C(" +
                           std::to_string(n) + "," + std::to_string(r) + ") = " +
                           std::to_string(binomial(n, r)));
  }
  const std::vector<Mask> subsets = ordered_subsets(n, r, order);
  std::vector<Mask> bases;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      bases.push_back(subsets[i]);
    } else if (bits[i] != '0') {
      throw MatroidError(ErrorCode::kParseError, "bitstring may only contain '0' and '1'");
    }
  }
  if (bases.empty()) throw MatroidError(ErrorCode::kParseError, "bitstring has no bases");
  return Matroid::from_bases(n, r, std::move(bases));
}

std::string format_bitstring(const Matroid& m, SubsetOrder order) {
  const std::vector<Mask> subsets = ordered_subsets(m.size(), m.rank(), order);
  std::string bits(subsets.size(), '0');
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (m.is_base(subsets[i])) bits[i] = '1';
  }
  return bits;
}

Matroid parse_matroid(std::string_view text, SubsetOrder order) {
  const auto lines = content_lines(text);
  if (!lines.empty() && is_bitstring_header(lines[0].second)) {
    std::istringstream in(lines[0].second);
    int n = 0;
    int r = 0;
    std::string bits;
    in >> n >> r >> bits;
    return parse_bitstring(n, r, bits, order);
  }
  return parse_text(text);
}

Matroid read_matroid_file(const std::string& path, SubsetOrder order) {
  std::ifstream in(path);
  if (!in) throw MatroidError(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matroid(buf.str(), order);
}

}  // namespace mtoric
