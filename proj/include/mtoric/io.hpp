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

#ifndef MTORIC_IO_HPP_
#define MTORIC_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "mtoric/matroid.hpp"

namespace mtoric {

// Order of the r-subsets of {1..n} behind a bitstring. Lex compares sorted
// tuples from the smallest element; colex from the largest.
enum class SubsetOrder { kLex, kColex };

std::vector<Mask> ordered_subsets(int n, int r, SubsetOrder order);

// Text format: first line "n r", then one base per line as space-separated
// 1-based elements; '#' starts a comment. A rank-0 matroid may list no bases.
Matroid parse_text(std::string_view text);
std::string format_text(const Matroid& m);

// C(n, r) characters; position i is the i-th r-subset in the given order.
Matroid parse_bitstring(int n, int r, std::string_view bits,
                        SubsetOrder order = SubsetOrder::kLex);
std::string format_bitstring(const Matroid& m, SubsetOrder order = SubsetOrder::kLex);

// Picks the bitstring reading when the first content line is "n r <01...>".
Matroid parse_matroid(std::string_view text, SubsetOrder order = SubsetOrder::kLex);
Matroid read_matroid_file(const std::string& path, SubsetOrder order = SubsetOrder::kLex);

}  // namespace mtoric

#endif  // MTORIC_IO_HPP_
