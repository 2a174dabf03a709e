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
 * @file ets.hpp
 * Elementary trapping sets as variable-node (VN) graphs: the (a, b, gamma)
 * parameter arithmetic, the non-backtracking system matrix and its spectral
 * radius, minimum-b bound evaluators for girth-8 and girth-6 codes, the
 * minimum-ETS-size search, and structural classification of VN graphs.
 *
 * Conventions. An (a, b)-ETS in a gamma-variable-regular Tanner graph is a
 * set of a variable nodes inducing b odd-degree check neighbours, with every
 * check neighbour of degree at most 2. Its VN graph has the a variables as
 * vertices and an edge per degree-2 check, so it carries (a*gamma - b)/2
 * edges and maximum degree at most gamma. Girth 8 forces the VN graph to be
 * triangle-free; girth 6 imposes no VN girth constraint.
 */

#include <array>
#include <optional>
#include <vector>

#include "trapset/graph.hpp"

namespace trapset {

/** Parameters of an elementary trapping set. */
struct EtsParams {
  int a = 0;             // number of variable nodes
  int b = 0;             // number of odd-degree check neighbours
  int gamma = 0;         // variable-node degree of the code
  int tanner_girth = 6;  // 6 or 8

  /** Throws Error unless a >= 1, b >= 0, gamma >= 2, tanner_girth in {6, 8},
   * and a*gamma - b is an even non-negative number. */
  void validate() const;
};

/** A VN graph together with the ETS parameters it realises. */
struct VnGraph {
  Graph graph;
  EtsParams params;
};

/** Edge count (a*gamma - b)/2 of the VN graph; validates the parameters. */
int vn_edge_count(const EtsParams& params);

/** Validates that graph realises params (order, size, degree cap, girth)
 * and returns the pair. */
VnGraph make_vn_graph(Graph graph, EtsParams params);

/**
 * The non-backtracking system matrix of a VN graph: rows and columns are
 * indexed by the ordered pairs (u, v) per edge uv, sorted lexicographically,
 * and entry ((u,v), (x,y)) is 1 iff y = u and x != v. The matrix is kept
 * implicitly as the underlying graph plus the index; apply() runs one
 * matrix-vector product in O(edges).
 */
class SystemMatrix {
 public:
  explicit SystemMatrix(const Graph& vn_graph);

  int dim() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& directed_pairs() const {
    return pairs_;
  }
  const Graph& vn_graph() const { return graph_; }

  /** Entry by row/column index (both in [0, dim)). */
  int entry(int row, int col) const;

  /** y = M x. */
  std::vector<double> apply(const std::vector<double>& x) const;

 private:
  Graph graph_;
  std::vector<std::pair<int, int>> pairs_;     // lexicographic directed edges
  std::vector<int> pair_index_;                // (u * n + v) -> row index
};

/** Builds the system matrix; the VN graph must have at least one edge. */
SystemMatrix build_system_matrix(const VnGraph& vn);
SystemMatrix build_system_matrix(const Graph& vn_graph);

/**
 * Spectral radius of the system matrix to absolute accuracy 1e-8, via
 * dominant-eigenvalue iteration on M + I (the shift defeats periodicity;
 * it is removed from the result). Acyclic VN graphs give exactly 0. Throws
 * Error if the iteration fails to converge within its cap.
 */
double spectral_radius(const SystemMatrix& m);

/** Dense eigensolver evaluation of the same quantity, used as an
 * independent cross-check for small dimensions. */
double spectral_radius_dense(const SystemMatrix& m);

/**
 * Smallest b >= 0 with b == a*gamma (mod 2) admissible for an (a, b)-ETS in
 * a girth-8 code in which no two 8-cycles share a variable node, i.e.
 * b >= a*gamma - a*(sqrt(24a-23)-1)/4. Evaluated in integer arithmetic so
 * perfect squares do not wobble. Requires a >= 1, gamma >= 2.
 */
int min_b_girth8(int a, int gamma);

/** The three chorded-cycle freeness variants for girth-6 bounds. */
enum class VnVariant { t1_free, t2_free, t3_free };

/**
 * Smallest b >= 0 with the variant's girth-6 inequality and parity
 * b == a*gamma (mod 2):
 *  - t1_free (a >= 5): b >= a*gamma - (a^2+a)/2
 *  - t2_free (a >= 7): b >= a*gamma - a^2/2 - 2
 *  - t3_free (a >= 6): b >= a*gamma - a^2/2 - a + 1
 * Returns nullopt when a is below the variant's range, where the bound is
 * not applicable.
 */
std::optional<int> min_b_girth6(int a, int gamma, VnVariant variant);

/** Code regime for the minimum-ETS-size search. */
enum class EtsRegime {
  girth8_no_shared_8cycles,
  girth6_t1_free,
  girth6_t2_free,
  girth6_t3_free,
};

/** Result of min_ets_size: the arithmetic lower bound and, when existence
 * was confirmed by search, the smallest realizable size. */
struct MinEtsSize {
  int a_lower = 0;
  std::optional<int> a_confirmed;
};

/** Ceilings for the existence search. */
struct EtsSearchLimits {
  int max_a = 14;
  long long node_budget = 400'000'000;
};

/**
 * Minimum size a of an (a, b)-ETS with the given b in the given regime,
 * scanning sizes a >= max(b, 1).
 *
 * a_lower is the smallest a not excluded by arithmetic alone: parity of
 * a*gamma - b, the simple-graph edge cap, the regime's edge-count cap
 * (triangle-free cap and the girth-8 family bound, or the exact extremal
 * number of the variant's forbidden pattern), and the regime's closed-form
 * bound where applicable.
 *
 * With confirm_existence, a_confirmed is the smallest a for which a
 * realizing VN graph exists — connected, minimum degree 2, maximum degree
 * <= gamma, triangle-free in the girth-8 regime, and free of the regime's
 * forbidden patterns. The existence scan trusts only parity and edge caps
 * (the closed-form bounds fail for small a), so it can land below a_lower.
 * nullopt means no realizer exists with a <= limits.max_a.
 */
MinEtsSize min_ets_size(int gamma, int b, EtsRegime regime,
                        bool confirm_existence,
                        const EtsSearchLimits& limits = {});

/** Whether the 4-cycles of a VN graph stay disjoint or interact. */
enum class C4Class {
  independent,  // no two 4-cycles share a vertex
  interacting,  // contains theta(1,3,3), theta(2,2,2) or two C4s at a vertex
};

/** Presence of a chorded-cycle pattern in a VN graph. */
enum class ChordClass { pattern_free, pattern_containing };

struct VnClassification {
  C4Class c4 = C4Class::independent;
  // Indexed by pattern: [0] = g1, [1] = g2, [2] = g3.
  std::array<ChordClass, 3> chord = {ChordClass::pattern_free,
                                     ChordClass::pattern_free,
                                     ChordClass::pattern_free};
};

/** Classifies a VN graph by interacting 4-cycles and chorded-cycle content. */
VnClassification classify_vn(const Graph& vn_graph);

/**
 * Search for one VN graph with the exact vertex/edge counts and constraints
 * (connected, minimum degree 2 implied). Returns a witness or nullopt when
 * none exists; the search is exhaustive over degree sequences and labelled
 * graphs with symmetry reduction. Throws ResourceLimitError if the node
 * budget is exhausted before the question is settled.
 */
struct VnSearchSpec {
  int a = 0;
  int m = 0;
  int max_degree = 0;
  int girth_at_least = 3;
  std::vector<Graph> forbidden;
};

std::optional<Graph> find_vn_witness(const VnSearchSpec& spec,
                                     long long node_budget = 400'000'000);

}  // namespace trapset
