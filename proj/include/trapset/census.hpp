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
 * @file census.hpp
 * Exhaustive census of variable-node graphs. For a given size a, label count
 * b and check degree gamma, every isomorphism class of admissible VN graphs
 * is enumerated, split into two sets by a structural criterion, and each set
 * is summarised by its count and the mean and median of the system-matrix
 * spectral radii of its members.
 */

#include <string>
#include <vector>

#include "trapset/ets.hpp"

namespace trapset {

/**
 * Structural criterion used to split a cell's classes into two sets.
 * c4_sharing separates graphs whose 4-cycles are pairwise vertex-disjoint
 * ("ind") from those containing a pair of 4-cycles sharing vertices, an edge
 * or a chord ("int"). g1/g2/g3 separate graphs free of the respective
 * chorded-cycle pattern ("F") from those containing it ("U").
 */
enum class CensusCriterion { c4_sharing, g1, g2, g3 };

/**
 * A rectangular sweep of census cells. Cells (a, b) with a in [a_lo, a_hi]
 * and b in [b_lo, b_hi] are visited in lexicographic order; values of b with
 * a*gamma - b odd do not correspond to any VN graph and are skipped.
 */
struct CensusSpec {
  int gamma = 3;
  int tanner_girth = 8;
  int a_lo = 0;
  int a_hi = 0;
  int b_lo = 0;
  int b_hi = 0;
  CensusCriterion criterion = CensusCriterion::c4_sharing;

  /** Throws Error unless the ranges and parameters make sense. */
  void validate() const;
};

/** One summarised set of a census cell, e.g. ind_C4(10,2) or F_G1(8,2). */
struct CensusRow {
  std::string set_label;
  int a = 0;
  int b = 0;
  int gamma = 0;
  long long count = 0;
  // Zero when the set is empty.
  double rho_mean = 0.0;
  double rho_median = 0.0;
};

/**
 * Default per-call ceilings on the VN-graph size. Enumeration cost grows
 * steeply with a, and more slowly with gamma (denser graphs close the search
 * sooner); these defaults keep full-table sweeps within sane wall time.
 */
inline constexpr int kCensusCeilingGamma3 = 14;
inline constexpr int kCensusCeilingDefault = 10;

/** The ceiling applied for a given check degree when none is passed. */
int census_ceiling(int gamma);

/**
 * All admissible VN graphs on exactly a vertices, one representative per
 * isomorphism class, sorted by canonical form: connected, minimum degree 2,
 * maximum degree at most gamma, (a*gamma - b)/2 edges, and girth at least 4
 * when tanner_girth is 8 (at least 3 otherwise). Vertices of degree 0 or 1
 * cannot lie on a cycle through the set, so leafy graphs are excluded; the
 * pinned cell counts in the tests fix that convention.
 *
 * Throws Error when the parameters are inconsistent (parity, negative edge
 * count) and ResourceLimitError when a exceeds the ceiling (pass ceiling > 0
 * to override the per-gamma default).
 */
std::vector<VnGraph> enumerate_vn(int a, int b, int gamma, int tanner_girth,
                                  int ceiling = 0);

/**
 * Runs the census over every cell of the spec. Each cell contributes two
 * rows, the criterion-free set first ("ind"/"F") and the criterion-containing
 * set second ("int"/"U"). Cells that admit no VN graph for coarse reasons
 * (b > a*gamma, or more edges than a simple graph can hold) yield rows with
 * count 0 rather than an error. The output is deterministic: cells are
 * ordered by (a, b) and statistics are computed over canonically sorted
 * spectra.
 */
std::vector<CensusRow> census(const CensusSpec& spec, int ceiling = 0);

/**
 * Renders rows as CSV with header `set,a,b,gamma,count,rho_mean,rho_median`;
 * the two radius columns are printed with five decimal places. An empty row
 * list produces just the header line.
 */
std::string format_census_csv(const std::vector<CensusRow>& rows);

/** Writes format_census_csv(rows) to path. I/O failures throw Error. */
void emit_census_csv(const std::vector<CensusRow>& rows,
                     const std::string& path);

}  // namespace trapset
