// Copyright 2026 The trapset authors
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

#include "trapset/qc.hpp"

namespace trapset {

namespace {

// (4, 8)-regular, lifting degree 35, girth 6; free of the three
// chorded-cycle substructures.  Mirrored in data/codes/c1.txt.
constexpr const char* kCode1 = R"(4 8 35
4 8 6 19 32 22 10 3
33 10 10 26 19 19 1 6
25 21 23 31 22 13 21 31
23 16 1 20 14 29 32 8
)";

// (4, 7)-regular, lifting degree 77, girth 8; no two 8-cycles share a
// variable node.  Mirrored in data/codes/c2.txt.
constexpr const char* kCode2 = R"(4 7 77
40 64 70 20 47 11 75
68 0 8 4 39 51 2
65 36 12 50 40 47 13
54 29 49 59 2 18 14
)";

}  // namespace

ExponentMatrix builtin_code(const std::string& name) {
  if (name == "C1") {
    return parse_exponent_matrix(kCode1);
  }
  if (name == "C2") {
    return parse_exponent_matrix(kCode2);
  }
  throw Error("unknown built-in code \"" + name + "\" (known: C1, C2)");
}

}  // namespace trapset
