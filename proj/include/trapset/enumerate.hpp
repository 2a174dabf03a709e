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

#pragma once

/**
 * @file enumerate.hpp
 * Exhaustive enumeration of unlabelled graphs under structural constraints.
 * The engine grows graphs edge by edge, discarding isomorphic duplicates via
 * canonical forms, so every isomorphism class satisfying the constraints is
 * produced exactly once.
 */

#include <optional>
#include <vector>

#include "trapset/graph.hpp"

namespace trapset {

/**
 * Constraints applied during enumeration. Unset optionals impose nothing.
 * Degree bounds, girth and forbidden subgraphs prune the search as it grows;
 * connectivity and the minimum degree are properties of the finished graph
 * and are enforced on output.
 */
struct EnumConstraints {
  std::optional<int> edge_count;
  std::optional<int> max_degree;
  std::optional<int> min_degree;
  std::optional<int> girth_at_least;
  bool connected = false;
  std::vector<Graph> forbidden_subgraphs;
};

/** Default ceiling on the number of vertices accepted by enumerate_graphs. */
inline constexpr int kEnumerationCeiling = 14;

/**
 * All graphs on exactly n vertices satisfying the constraints, one
 * representative per isomorphism class, sorted by canonical form. Throws
 * ResourceLimitError when n exceeds the ceiling; pass a larger ceiling
 * explicitly to go beyond the default.
 */
std::vector<Graph> enumerate_graphs(int n, const EnumConstraints& constraints = {},
                                    int ceiling = kEnumerationCeiling);

}  // namespace trapset
