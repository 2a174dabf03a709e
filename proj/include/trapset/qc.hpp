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
 * @file qc.hpp
 * Quasi-cyclic LDPC codes given by exponent matrices: lifting to binary
 * parity-check matrices and Tanner graphs, exact girth computation on the
 * block level, cycle enumeration with shift-orbit grouping, detectors for
 * the structural hypotheses of the girth-8 and girth-6 bounds (shared
 * 8-cycles, chorded-cycle substructures), and an exhaustive small-ETS
 * search inside a lifted code.
 *
 * Conventions. An exponent matrix E has gamma block rows, eta block
 * columns, and lifting degree p >= 2. Entry e[i][j] is a shift in
 * {0..p-1}, or kNoShift for the all-zero block. Lifting replaces shift s
 * by the p x p circulant with a 1 at (r, (r + s) mod p) in every row r,
 * so check node (i, r) is joined to variable node (j, (r + s) mod p).
 * Lifted variable nodes are numbered j*p + s and check nodes i*p + r.
 */

#include <optional>
#include <string>
#include <vector>

#include "trapset/graph.hpp"

namespace trapset {

/** Sentinel exponent entry for the all-zero (disconnected) block. */
inline constexpr int kNoShift = -1;

/** A quasi-cyclic code description: shifts of circulant blocks. */
struct ExponentMatrix {
  int block_rows = 0;  ///< gamma, number of block rows
  int block_cols = 0;  ///< eta, number of block columns
  int lifting = 0;     ///< p, circulant size (>= 2)
  /** block_rows x block_cols shift entries; kNoShift marks a zero block. */
  std::vector<std::vector<int>> shifts;

  /** True when no entry is kNoShift. */
  bool fully_connected() const;

  /** Throws Error unless dimensions and entries are consistent. */
  void validate() const;
};

/**
 * Parses the plain-text exponent format: a header line "gamma eta p"
 * followed by gamma rows of eta entries, where each entry is a shift in
 * {0..p-1} or the word "inf" for a zero block.  Throws Error on malformed
 * input or out-of-range shifts.
 */
ExponentMatrix parse_exponent_matrix(const std::string& text);

/** Renders an exponent matrix back into the plain-text format. */
std::string format_exponent_matrix(const ExponentMatrix& e);

/** A 0/1 matrix stored by row and column support, both sorted. */
struct SparseBinaryMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> row_support;  ///< column indices per row
  std::vector<std::vector<int>> col_support;  ///< row indices per column

  bool at(int row, int col) const;
  long long ones() const;
};

/** Expands each block of E into its circulant; result is (gamma*p) x (eta*p). */
SparseBinaryMatrix lift(const ExponentMatrix& e);

/**
 * Bipartite adjacency view of a parity-check matrix: variable node j is
 * column j, check node i is row i.
 */
struct TannerGraph {
  int variables = 0;
  int checks = 0;
  std::vector<std::vector<int>> var_neighbors;    ///< checks on each variable
  std::vector<std::vector<int>> check_neighbors;  ///< variables on each check

  /** Common variable degree, or nullopt when degrees differ (or no nodes). */
  std::optional<int> variable_degree() const;
};

/** Builds the Tanner graph of H; inverts lift() exactly. */
TannerGraph tanner(const SparseBinaryMatrix& h);

/** Rank of H over GF(2), by bitset Gaussian elimination. */
int gf2_rank(const SparseBinaryMatrix& h);

/** Writes H in alist format (unpadded index lists, 1-based). */
void emit_alist(const SparseBinaryMatrix& h, const std::string& path);

/** Reads an alist file; tolerates zero-padded index lists. */
SparseBinaryMatrix parse_alist(const std::string& path);

/**
 * Girth of the lifted Tanner graph, computed on the block level: a closed
 * block walk of length 2k with alternating shifts distinct at every step
 * lifts to a 2k-cycle exactly when its alternating shift sum is 0 mod p.
 * Returns Graph::kInfiniteGirth when the lifted graph is a forest.
 */
int girth_qc(const ExponentMatrix& e);

/** BFS girth of an explicit Tanner graph (the cross-check for girth_qc). */
int tanner_girth(const TannerGraph& g);

/**
 * One simple cycle of the lifted Tanner graph.  The traversal order is
 * variables[0], checks[0], variables[1], checks[1], ..., closing from
 * checks[k-1] back to variables[0]: checks[t] joins variables[t] and
 * variables[(t+1) mod k].  block_trace lists the (block row, block col)
 * of each of the 2k edges in the same order.  orbit_size counts the
 * distinct cycles in this cycle's orbit under the shift automorphism
 * r -> r + 1 mod p; the listed cycle is the orbit representative.
 */
struct CycleWitness {
  int length = 0;
  std::vector<int> variables;
  std::vector<int> checks;
  std::vector<std::pair<int, int>> block_trace;
  int orbit_size = 0;
};

/**
 * All simple cycles of length <= max_len in the lifted graph, one
 * representative per shift orbit, deduplicated up to rotation and
 * reflection, sorted by (length, node sequence).  The total number of
 * distinct cycles is the sum of orbit_size over the result.  max_len is
 * capped at 12; larger values throw ResourceLimitError.
 */
std::vector<CycleWitness> enumerate_cycles(const ExponentMatrix& e, int max_len);

/**
 * How two 8-cycles with a common variable node overlap, named by the
 * VN-graph image of their union: theta(2,2,2) when they share a path of
 * three variables (two common checks), theta(1,3,3) when they share two
 * variables through one common check, d440 (two 4-cycles joined at a
 * vertex) when they share exactly one variable and no check.  Overlaps
 * possible only below girth 6 fall back to `other`.
 */
enum class SharedPattern { theta222, theta133, d440, other };

/** A pair of distinct 8-cycles sharing at least one variable node. */
struct SharedCyclePair {
  CycleWitness first;
  CycleWitness second;
  int shared_variables = 0;
  int shared_checks = 0;
  SharedPattern pattern = SharedPattern::other;
  /** Distinct pairs in this pair's orbit under the shift automorphism. */
  int orbit_size = 0;
};

/**
 * All unordered pairs of distinct 8-cycles that share at least one
 * variable node, one representative per shift orbit, each tagged with its
 * overlap pattern.  An empty result certifies the girth-8 bound's
 * no-sharing hypothesis.  Requires a variable-regular code.
 */
std::vector<SharedCyclePair> detect_shared_8cycles(const ExponentMatrix& e);

/** The three chorded-cycle Tanner substructures of the girth-6 bounds. */
enum class TVariant { t1, t2, t3 };

/** An embedded substructure: its variable and check nodes, both sorted. */
struct SubstructureWitness {
  std::vector<int> variables;
  std::vector<int> checks;
  /** Distinct embeddings in this one's shift orbit (1 for plain graphs). */
  int orbit_size = 0;
};

/**
 * All embeddings of the variant's Tanner pattern in g, deduplicated by
 * node set.  The pattern for variant Ti is the subdivision of the chorded
 * cycle Gi: one variable per Gi vertex, one degree-2 check per Gi edge,
 * where each of those checks meets exactly the two variables of its Gi
 * edge among the embedded variables (a check meeting a third one would
 * force degree three inside any containing trapping set, so that set
 * could not be elementary).  Requires a variable-regular Tanner graph of
 * girth >= 6 (Error otherwise); an empty result for all three variants
 * certifies the girth-6 bound hypotheses.
 */
std::vector<SubstructureWitness> detect_T(const TannerGraph& g, TVariant variant);

/** detect_T on the lifted code, with witnesses grouped into shift orbits. */
std::vector<SubstructureWitness> detect_T(const ExponentMatrix& e, TVariant variant);

/** One elementary trapping set found inside a lifted code. */
struct EtsRecord {
  std::vector<int> variables;  ///< lifted variable nodes, sorted
  int a = 0;                   ///< |variables|
  int b = 0;                   ///< odd-degree check neighbours
  Graph vn_graph;              ///< VN graph on the variables in sorted order
  double rho = 0.0;            ///< spectral radius of its system matrix
  int orbit_size = 0;          ///< distinct sets in its shift orbit
};

/**
 * Exhaustive search for connected elementary trapping sets with at most
 * a_max variables and at most b_max odd checks, one representative per
 * shift orbit, sorted by (a, b, variables).  Disconnected trapping sets
 * are exactly the unions of variable-disjoint, check-disjoint connected
 * ones, so only connected sets are reported.  Requires a variable-regular
 * code of girth >= 6.  a_max is capped at 12 and the enumeration carries
 * a node budget; exceeding either throws ResourceLimitError.
 */
std::vector<EtsRecord> ets_search_in_code(const ExponentMatrix& e, int a_max,
                                          int b_max,
                                          long long node_budget = 200'000'000);

/**
 * Built-in reference codes: "C1" is the (4,8)-regular girth-6 code with
 * lifting degree 35, "C2" the (4,7)-regular girth-8 code with lifting
 * degree 77.  Throws Error for unknown names.
 */
ExponentMatrix builtin_code(const std::string& name);

}  // namespace trapset
