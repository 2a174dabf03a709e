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

#include "trapset/reproduce.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "trapset/census.hpp"
#include "trapset/ets.hpp"
#include "trapset/qc.hpp"

namespace trapset {

namespace {

std::string load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("reproduce: cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

/** Splits a CSV line on commas. Set labels such as ind_C4(10,2) embed a
 * comma, so commas inside parentheses do not separate fields. */
std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  int depth = 0;
  for (char c : line) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

/** Data lines of a CSV text: comments ('#') and blank lines dropped, the
 * first remaining line split off as the header. */
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(const std::string& text, const std::string& what) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (table.header.empty()) {
      table.header = split_fields(line);
    } else {
      table.rows.push_back(split_fields(line));
    }
  }
  if (table.header.empty()) throw Error("reproduce: " + what + " has no header");
  return table;
}

std::string row_key(const CsvTable& table, const std::vector<std::string>& row,
                    int key_cols) {
  if (key_cols == 1) return row[0];
  std::string key;
  for (int i = 0; i < key_cols; ++i) {
    if (i > 0) key += ',';
    key += table.header[i] + "=" + row[i];
  }
  return key;
}

std::string join_fields(const std::vector<std::string>& fields) {
  std::string line;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += fields[i];
  }
  return line;
}

// ---------------------------------------------------------------------------
// Generators. Each returns the regenerated table in the golden CSV format.

/** Minimum ETS size in the variant's regime, as a table cell: the smallest
 * confirmed size, or "-" when no realizer exists up to the scan ceiling. */
std::string min_size_cell(int gamma, int b, EtsRegime regime) {
  const MinEtsSize result = min_ets_size(gamma, b, regime, true);
  if (!result.a_confirmed) return "-";
  return std::to_string(*result.a_confirmed);
}

std::string generate_table1() {
  std::string csv = "gamma,b,t1_free,t2_free,t3_free\n";
  const int b_max[] = {3, 4, 7};  // for gamma = 3, 4, 5
  for (int gamma = 3; gamma <= 5; ++gamma) {
    for (int b = 0; b <= b_max[gamma - 3]; ++b) {
      if (gamma % 2 == 0 && b % 2 != 0) continue;  // a*gamma - b always odd
      csv += std::to_string(gamma) + "," + std::to_string(b);
      csv += "," + min_size_cell(gamma, b, EtsRegime::girth6_t1_free);
      csv += "," + min_size_cell(gamma, b, EtsRegime::girth6_t2_free);
      csv += "," + min_size_cell(gamma, b, EtsRegime::girth6_t3_free);
      csv += "\n";
    }
  }
  return csv;
}

std::string generate_table2(bool extended) {
  CensusSpec spec;
  spec.gamma = 3;
  spec.tanner_girth = 8;
  spec.a_lo = 10;
  spec.a_hi = extended ? 14 : 12;
  spec.b_lo = 1;
  spec.b_hi = 6;
  spec.criterion = CensusCriterion::c4_sharing;
  return format_census_csv(census(spec));
}

std::string generate_table3(bool extended) {
  std::vector<CensusRow> rows;
  for (const CensusCriterion criterion :
       {CensusCriterion::g1, CensusCriterion::g2, CensusCriterion::g3}) {
    CensusSpec spec;
    spec.gamma = 4;
    spec.tanner_girth = 6;
    spec.a_lo = 8;
    spec.a_hi = extended ? 10 : 9;
    spec.b_lo = 2;
    spec.b_hi = 4;
    spec.criterion = criterion;
    for (CensusRow& row : census(spec)) rows.push_back(std::move(row));
  }
  return format_census_csv(rows);
}

/** Keeps only the golden data rows with a <= a_hi (field index 1), so a
 * non-extended run is judged against the slice of the table it regenerates
 * rather than reporting the extended rows as missing. */
std::string restrict_to_max_a(const std::string& golden, int a_hi,
                              const std::string& what) {
  const CsvTable table = parse_csv(golden, what);
  std::string text = join_fields(table.header) + "\n";
  for (const auto& row : table.rows) {
    if (row.size() < 2) throw Error("reproduce: ragged golden row in " + what);
    if (std::stoi(row[1]) <= a_hi) text += join_fields(row) + "\n";
  }
  return text;
}

long long total_embeddings(const std::vector<SubstructureWitness>& orbits) {
  long long total = 0;
  for (const SubstructureWitness& w : orbits) total += w.orbit_size;
  return total;
}

/** The published structural claims about the built-in codes, re-audited. */
ReproReport reproduce_girth_claims() {
  ReproReport report;
  report.target = "girth-claims";

  const ExponentMatrix c1 = builtin_code("C1");
  const ExponentMatrix c2 = builtin_code("C2");

  std::string csv = "claim,expected,actual\n";
  const auto claim = [&](const std::string& name, long long expected,
                         long long actual) {
    csv += name + "," + std::to_string(expected) + "," +
           std::to_string(actual) + "\n";
    ++report.cells_total;
    if (expected == actual) {
      ++report.cells_matched;
    } else {
      report.mismatches.push_back(
          {name, std::to_string(expected), std::to_string(actual)});
    }
  };

  claim("girth(C1)", 6, girth_qc(c1));
  claim("girth(C2)", 8, girth_qc(c2));
  claim("t1_embeddings(C1)", 0, total_embeddings(detect_T(c1, TVariant::t1)));
  claim("t2_embeddings(C1)", 0, total_embeddings(detect_T(c1, TVariant::t2)));
  claim("t3_embeddings(C1)", 0, total_embeddings(detect_T(c1, TVariant::t3)));

  long long shared_pairs = 0;
  for (const SharedCyclePair& pair : detect_shared_8cycles(c2)) {
    shared_pairs += pair.orbit_size;
  }
  claim("shared_8cycle_pairs(C2)", 0, shared_pairs);

  report.generated_csv = std::move(csv);
  return report;
}

}  // namespace

ReproTarget parse_repro_target(const std::string& name) {
  if (name == "table1") return ReproTarget::table1;
  if (name == "table2") return ReproTarget::table2;
  if (name == "table3") return ReproTarget::table3;
  if (name == "girth-claims") return ReproTarget::girth_claims;
  throw Error("reproduce: unknown target '" + name +
              "' (expected table1, table2, table3 or girth-claims)");
}

ReproReport diff_csv(const std::string& target, const std::string& golden,
                     const std::string& generated, int key_cols) {
  ReproReport report;
  report.target = target;
  report.generated_csv = generated;

  const CsvTable want = parse_csv(golden, target + " golden");
  const CsvTable have = parse_csv(generated, target + " regenerated");

  ++report.cells_total;
  if (want.header == have.header) {
    ++report.cells_matched;
  } else {
    report.mismatches.push_back(
        {"header", join_fields(want.header), join_fields(have.header)});
    return report;
  }
  const int columns = static_cast<int>(want.header.size());
  if (key_cols < 1 || key_cols >= columns) {
    throw Error("reproduce: bad key width for " + target);
  }

  std::map<std::string, const std::vector<std::string>*> golden_rows;
  for (const auto& row : want.rows) {
    if (static_cast<int>(row.size()) != columns) {
      throw Error("reproduce: ragged golden row in " + target);
    }
    golden_rows[row_key(want, row, key_cols)] = &row;
  }

  std::map<std::string, bool> golden_seen;
  for (const auto& [key, row] : golden_rows) golden_seen[key] = false;

  for (const auto& row : have.rows) {
    if (static_cast<int>(row.size()) != columns) {
      throw Error("reproduce: ragged regenerated row in " + target);
    }
    const std::string key = row_key(have, row, key_cols);
    const auto found = golden_rows.find(key);
    if (found == golden_rows.end()) {
      ++report.cells_total;
      report.mismatches.push_back({key + ":row", "(missing)", join_fields(row)});
      continue;
    }
    golden_seen[key] = true;
    for (int col = key_cols; col < columns; ++col) {
      ++report.cells_total;
      if ((*found->second)[col] == row[col]) {
        ++report.cells_matched;
      } else {
        report.mismatches.push_back(
            {key + ":" + want.header[col], (*found->second)[col], row[col]});
      }
    }
  }
  for (const auto& [key, seen] : golden_seen) {
    if (!seen) {
      ++report.cells_total;
      report.mismatches.push_back(
          {key + ":row", join_fields(*golden_rows.at(key)), "(missing)"});
    }
  }
  return report;
}

ReproReport reproduce(ReproTarget target, bool extended,
                      const std::string& golden_dir) {
  switch (target) {
    case ReproTarget::table1:
      return diff_csv("table1", load_file(golden_dir + "/table1.csv"),
                      generate_table1(), 2);
    case ReproTarget::table2:
      return diff_csv(
          "table2",
          restrict_to_max_a(load_file(golden_dir + "/table2.csv"),
                            extended ? 14 : 12, "table2 golden"),
          generate_table2(extended), 1);
    case ReproTarget::table3:
      return diff_csv(
          "table3",
          restrict_to_max_a(load_file(golden_dir + "/table3.csv"),
                            extended ? 10 : 9, "table3 golden"),
          generate_table3(extended), 1);
    case ReproTarget::girth_claims:
      return reproduce_girth_claims();
  }
  throw Error("reproduce: unknown target");
}

std::string format_report(const ReproReport& report) {
  std::string text = "target " + report.target + ": " +
                     std::to_string(report.cells_total) + " cells, " +
                     std::to_string(report.cells_matched) + " matched, " +
                     std::to_string(report.mismatches.size()) + " mismatched\n";
  for (const CellDiff& diff : report.mismatches) {
    text += "  mismatch " + diff.cell + ": golden " + diff.expected +
            ", regenerated " + diff.actual + "\n";
  }
  text += report.ok() ? "result: OK\n" : "result: MISMATCH\n";
  return text;
}

}  // namespace trapset
