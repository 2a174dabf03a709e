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
 * @file turan.hpp
 * Extremal edge counts for graphs avoiding fixed forbidden subgraphs:
 * closed-form upper bounds, exact values with their extremal families for
 * the three chorded-cycle patterns, an induction-step classifier for edge
 * bound sequences, and a brute-force search oracle for small orders.
 */

#include <functional>
#include <optional>
#include <vector>

#include "trapset/enumerate.hpp"
#include "trapset/graph.hpp"

namespace trapset {

/** Forbidden-family maximisation query: largest edge count among n-vertex
 * graphs containing no member of the family. */
struct TuranQuery {
  std::vector<Graph> family;
  int n = 0;
};

/** Result of an extremal edge-count computation. For kind == exact the
 * value is an exact non-negative integer (stored in a double for uniformity
 * with real-valued upper bounds). extremal_classes, when present, holds one
 * representative per isomorphism class attaining the value; it is absent
 * when the extremal family is not characterised. */
struct TuranResult {
  enum class Kind { exact, upper_bound };
  Kind kind = Kind::exact;
  double value = 0.0;
  std::optional<std::vector<Graph>> extremal_classes;
};

/** The three chorded-cycle patterns with characterised extremal families. */
enum class TuranTarget { g1, g2, g3 };

/**
 * Upper bound n(sqrt(8n-7)+1)/4 on the edge count of an n-vertex graph with
 * no theta(2,2,2) subgraph (no two 4-cycles sharing a path of length 2,
 * equivalently no K_{2,3}). Requires n >= 5. The integer edge cap is the
 * floor of the returned value.
 */
double theta222_upper(int n);

/**
 * The four shapes that cannot occur among variable nodes of a Tanner graph
 * with girth 8: the triangle, theta(2,2,2), theta(1,3,3), and two 4-cycles
 * sharing one vertex.
 */
std::vector<Graph> girth8_obstruction_family();

/**
 * Upper bound n(sqrt(24n-23)-1)/8 on the edge count of an n-vertex graph
 * avoiding every member of girth8_obstruction_family(). Requires n >= 5.
 */
double girth8_family_upper(int n);

/**
 * Exact extremal edge count for the target pattern, with the extremal
 * isomorphism classes where they are characterised:
 *  - g1: n >= 5, value floor((n^2+n)/4), classes known for every n;
 *  - g2: n >= 6, value 11 at n=6 (unique class) and floor(n^2/4)+1 for
 *    n >= 7 (classes not characterised);
 *  - g3: n >= 6, values 12/15/19 at n=6/7/8 with explicit class lists, and
 *    floor(n^2/4)+ceil(n/2)-1 with a unique class for n >= 9.
 * Orders below the covered range are rejected with an error naming the
 * missing case; extrapolation below the range is never attempted.
 */
TuranResult ex_exact(TuranTarget target, int n);

/**
 * Margin (n-1)*(f(n+1)+1) - (n+1)*f(n) of the vertex-deletion induction
 * step for a candidate edge-bound sequence f: if every n-vertex graph obeys
 * ex(n) <= f(n), the sign of this margin controls what the induction yields
 * at order n+1.
 */
long long induction_margin(const std::function<long long(long long)>& f,
                           long long n);

/** Branch selected by the induction margin. */
enum class InductionCase {
  strict,             // margin > 0: ex(n+1) <= f(n+1)
  zero_or_minus_one,  // margin in {0,-1}: ex(n+1) <= f(n+1) + 1
  inapplicable,       // margin < -1: the induction step gives nothing
};

InductionCase induction_case(const std::function<long long(long long)>& f,
                             long long n);

/** Default order ceiling for the brute-force search oracle. */
inline constexpr int kBruteForceCeiling = 8;

/**
 * Exhaustive search for the extremal value: enumerates family-free graphs
 * of order query.n level by edge count and reports the top non-empty level
 * together with every isomorphism class attaining it. Independent of the
 * closed forms above, so it can serve as their oracle. Throws
 * ResourceLimitError when query.n exceeds the ceiling.
 */
TuranResult brute_force_ex(const TuranQuery& query,
                           int ceiling = kBruteForceCeiling);

}  // namespace trapset
