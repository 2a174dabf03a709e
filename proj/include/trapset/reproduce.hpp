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
 * @file reproduce.hpp
 * Regeneration of the shipped reference tables and structural claims, with
 * a cell-by-cell diff against the golden CSV files under data/golden/.
 * The golden files record the published reference values verbatim; the
 * regeneration recomputes every cell from scratch, so a mismatch is an
 * honest disagreement between this library and the reference, not noise.
 */

#include <string>
#include <vector>

namespace trapset {

/** The reproducible targets. */
enum class ReproTarget {
  table1,        ///< minimum ETS sizes by (gamma, b) and forbidden pattern
  table2,        ///< gamma=3 census split by 4-cycle sharing
  table3,        ///< gamma=4 census split by chorded-cycle content
  girth_claims,  ///< structural audit of the built-in codes C1 and C2
};

/** Parses a target name: "table1", "table2", "table3", "girth-claims". */
ReproTarget parse_repro_target(const std::string& name);

/** One golden-versus-regenerated disagreement. */
struct CellDiff {
  std::string cell;      ///< e.g. "int_C4(10,4):count" or "gamma=5,b=7:t2_free"
  std::string expected;  ///< golden (published) value
  std::string actual;    ///< regenerated value
};

/** Outcome of one reproduction run. */
struct ReproReport {
  std::string target;
  int cells_total = 0;
  int cells_matched = 0;
  std::vector<CellDiff> mismatches;
  /** The regenerated table in the golden CSV format (data lines only for
   * comparison purposes; includes the header line). */
  std::string generated_csv;

  bool ok() const { return mismatches.empty() && cells_total > 0; }
};

/**
 * Cell-level diff of two CSV texts sharing a header: lines starting with
 * '#' are comments, the first remaining line is the header, and the first
 * key_cols fields of each data line form the row key. Every field outside
 * the key is one cell, labelled "<key>:<column name>"; rows present on one
 * side only contribute a "<key>:row" mismatch against "(missing)".
 */
ReproReport diff_csv(const std::string& target, const std::string& golden,
                     const std::string& generated, int key_cols);

/**
 * Regenerates the target and diffs it against the golden file in
 * golden_dir (girth_claims carries its expectations inline and ignores
 * golden_dir). With extended set, table2 extends the census to a <= 14
 * and table3 to a <= 10; the flag is ignored for the other targets.
 * Throws Error when the golden file is missing or malformed and
 * ResourceLimitError when a regeneration ceiling is exceeded.
 */
ReproReport reproduce(ReproTarget target, bool extended,
                      const std::string& golden_dir);

/** Renders the per-cell report: one line per cell group, mismatches with
 * expected/actual values, and a final ok/mismatch summary line. */
std::string format_report(const ReproReport& report);

}  // namespace trapset
