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

#include "trapset/census.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "trapset/enumerate.hpp"

namespace trapset {
namespace {

struct SetStats {
  long long count = 0;
  double mean = 0.0;
  double median = 0.0;
};

// Sorts the spectra so that both the sum and the median are independent of
// enumeration order, then takes the arithmetic mean of the central pair for
// even-sized sets.
SetStats summarize(std::vector<double>& rho) {
  if (rho.empty()) return {};
  std::sort(rho.begin(), rho.end());
  double sum = 0.0;
  for (double r : rho) sum += r;
  const std::size_t mid = rho.size() / 2;
  const double median = rho.size() % 2 == 1
                            ? rho[mid]
                            : (rho[mid - 1] + rho[mid]) / 2.0;
  return {static_cast<long long>(rho.size()),
          sum / static_cast<double>(rho.size()), median};
}

bool in_free_set(const VnClassification& cls, CensusCriterion criterion) {
  switch (criterion) {
    case CensusCriterion::c4_sharing:
      return cls.c4 == C4Class::independent;
    case CensusCriterion::g1:
      return cls.chord[0] == ChordClass::pattern_free;
    case CensusCriterion::g2:
      return cls.chord[1] == ChordClass::pattern_free;
    case CensusCriterion::g3:
      return cls.chord[2] == ChordClass::pattern_free;
  }
  throw Error("census: unknown criterion");
}

std::pair<const char*, const char*> set_names(CensusCriterion criterion) {
  switch (criterion) {
    case CensusCriterion::c4_sharing:
      return {"ind_C4", "int_C4"};
    case CensusCriterion::g1:
      return {"F_G1", "U_G1"};
    case CensusCriterion::g2:
      return {"F_G2", "U_G2"};
    case CensusCriterion::g3:
      return {"F_G3", "U_G3"};
  }
  throw Error("census: unknown criterion");
}

std::string cell_label(const char* set_name, int a, int b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s(%d,%d)", set_name, a, b);
  return buf;
}

CensusRow make_row(const char* set_name, int a, int b, int gamma,
                   std::vector<double>& rho) {
  const SetStats stats = summarize(rho);
  CensusRow row;
  row.set_label = cell_label(set_name, a, b);
  row.a = a;
  row.b = b;
  row.gamma = gamma;
  row.count = stats.count;
  row.rho_mean = stats.mean;
  row.rho_median = stats.median;
  return row;
}

}  // namespace

void CensusSpec::validate() const {
  if (gamma < 2) throw Error("census: check degree must be at least 2");
  if (tanner_girth != 6 && tanner_girth != 8) {
    throw Error("census: Tanner girth must be 6 or 8");
  }
  if (a_lo < 1 || a_lo > a_hi) throw Error("census: bad size range");
  if (b_lo < 0 || b_lo > b_hi) throw Error("census: bad label-count range");
}

int census_ceiling(int gamma) {
  return gamma == 3 ? kCensusCeilingGamma3 : kCensusCeilingDefault;
}

std::vector<VnGraph> enumerate_vn(int a, int b, int gamma, int tanner_girth,
                                  int ceiling) {
  EtsParams params;
  params.a = a;
  params.b = b;
  params.gamma = gamma;
  params.tanner_girth = tanner_girth;
  params.validate();

  const int cap = ceiling > 0 ? ceiling : census_ceiling(gamma);
  if (a > cap) {
    throw ResourceLimitError("enumerate_vn: size " + std::to_string(a) +
                             " exceeds the enumeration ceiling " +
                             std::to_string(cap));
  }

  EnumConstraints constraints;
  constraints.edge_count = vn_edge_count(params);
  constraints.max_degree = gamma;
  constraints.min_degree = 2;
  constraints.girth_at_least = tanner_girth == 8 ? 4 : 3;
  constraints.connected = true;

  std::vector<VnGraph> out;
  for (Graph& g : enumerate_graphs(a, constraints, a)) {
    if (!g.is_connected()) {
      throw Error("enumerate_vn: enumerator produced a disconnected graph");
    }
    for (int d : g.degree_sequence()) {
      if (d < 2) throw Error("enumerate_vn: enumerator produced a leafy graph");
    }
    // make_vn_graph re-validates order, size, degrees and girth.
    out.push_back(make_vn_graph(std::move(g), params));
  }
  return out;
}

std::vector<CensusRow> census(const CensusSpec& spec, int ceiling) {
  spec.validate();
  const auto [free_name, containing_name] = set_names(spec.criterion);

  std::vector<CensusRow> rows;
  for (int a = spec.a_lo; a <= spec.a_hi; ++a) {
    for (int b = spec.b_lo; b <= spec.b_hi; ++b) {
      const long long degree_sum = 1LL * a * spec.gamma - b;
      if (degree_sum % 2 != 0) continue;  // no VN graph has this parity

      // Cells that cannot hold any graph for coarse reasons contribute a
      // pair of empty rows rather than an error.
      const bool infeasible =
          degree_sum < 0 || degree_sum / 2 > 1LL * a * (a - 1) / 2;

      std::vector<double> free_rho;
      std::vector<double> containing_rho;
      if (!infeasible) {
        for (const VnGraph& vn :
             enumerate_vn(a, b, spec.gamma, spec.tanner_girth, ceiling)) {
          const double rho = spectral_radius(build_system_matrix(vn));
          const bool is_free = in_free_set(classify_vn(vn.graph), spec.criterion);
          (is_free ? free_rho : containing_rho).push_back(rho);
        }
      }
      rows.push_back(make_row(free_name, a, b, spec.gamma, free_rho));
      rows.push_back(make_row(containing_name, a, b, spec.gamma, containing_rho));
    }
  }
  return rows;
}

std::string format_census_csv(const std::vector<CensusRow>& rows) {
  std::string text = "set,a,b,gamma,count,rho_mean,rho_median\n";
  for (const CensusRow& row : rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%s,%d,%d,%d,%lld,%.5f,%.5f\n",
                  row.set_label.c_str(), row.a, row.b, row.gamma, row.count,
                  row.rho_mean, row.rho_median);
    text += line;
  }
  return text;
}

void emit_census_csv(const std::vector<CensusRow>& rows,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("census: cannot open " + path + " for writing");
  out << format_census_csv(rows);
  out.flush();
  if (!out) throw Error("census: failed writing " + path);
}

}  // namespace trapset
