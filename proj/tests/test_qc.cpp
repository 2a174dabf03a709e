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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trapset/graph.hpp"
#include "trapset/qc.hpp"

namespace {

using trapset::ExponentMatrix;
using trapset::kNoShift;
using trapset::TannerGraph;
using trapset::TVariant;

ExponentMatrix make_matrix(int gamma, int eta, int p,
                           std::vector<std::vector<int>> shifts) {
  ExponentMatrix e;
  e.block_rows = gamma;
  e.block_cols = eta;
  e.lifting = p;
  e.shifts = std::move(shifts);
  e.validate();
  return e;
}

ExponentMatrix all_zero(int gamma, int eta, int p) {
  return make_matrix(gamma, eta, p,
                     std::vector<std::vector<int>>(
                         gamma, std::vector<int>(eta, 0)));
}

/** Reference 2k-cycle count of the complete bipartite graph K_{n,n}. */
long long knn_cycles(int n, int k) {
  long long arrangements = 1;
  for (int t = n; t > n - k; --t) {
    arrangements *= t;  // n! / (n-k)!
  }
  return arrangements * arrangements / (2 * k);
}

/** Definitional trapping-set check on a Tanner graph. */
bool is_trapping_set(const TannerGraph& g, const std::vector<int>& vars,
                     int b_expected) {
  std::map<int, int> load;
  for (int v : vars) {
    for (int c : g.var_neighbors[v]) {
      ++load[c];
    }
  }
  int odd = 0;
  for (const auto& [check, degree] : load) {
    if (degree > 2) {
      return false;
    }
    odd += (degree == 1);
  }
  return odd == b_expected;
}

/**
 * Independent simple-cycle enumeration on an explicit Tanner graph: plain
 * DFS over alternating variable/check paths, counting each cycle once by
 * anchoring at its minimal variable and fixing the traversal direction.
 * The direction tie-break needs at least three variables per cycle, so
 * this only supports length >= 6.
 */
long long count_cycles_direct(const TannerGraph& g, int length,
                              std::map<int, int>* per_variable = nullptr) {
  const int k = length / 2;
  long long total = 0;
  std::vector<int> path_vars;
  std::vector<char> var_used(g.variables, 0);
  std::vector<char> check_used(g.checks, 0);

  auto walk = [&](auto&& self, int var, int root) -> void {
    if (static_cast<int>(path_vars.size()) == k) {
      for (int c : g.var_neighbors[var]) {
        if (!check_used[c] &&
            std::binary_search(g.check_neighbors[c].begin(),
                               g.check_neighbors[c].end(), root)) {
          // Count each direction once: compare the second and last variable.
          if (path_vars[1] < path_vars.back()) {
            ++total;
            if (per_variable != nullptr) {
              for (int v : path_vars) {
                ++(*per_variable)[v];
              }
            }
          }
        }
      }
      return;
    }
    for (int c : g.var_neighbors[var]) {
      if (check_used[c]) {
        continue;
      }
      check_used[c] = 1;
      for (int next : g.check_neighbors[c]) {
        if (next <= root || var_used[next]) {
          continue;
        }
        var_used[next] = 1;
        path_vars.push_back(next);
        self(self, next, root);
        path_vars.pop_back();
        var_used[next] = 0;
      }
      check_used[c] = 0;
    }
  };

  for (int root = 0; root < g.variables; ++root) {
    var_used[root] = 1;
    path_vars = {root};
    walk(walk, root, root);
    var_used[root] = 0;
  }
  return total;
}

/**
 * A variable-regular Tanner graph holding the subdivision of a chorded
 * cycle: one variable per pattern vertex, one degree-2 check per pattern
 * edge, plus private degree-1 checks padding every variable to degree 4.
 */
TannerGraph plant_pattern(const trapset::Graph& pattern) {
  TannerGraph g;
  g.variables = pattern.order();
  g.var_neighbors.assign(g.variables, {});
  for (const auto& [u, v] : pattern.edges()) {
    const int check = g.checks++;
    g.check_neighbors.push_back({u, v});
    g.var_neighbors[u].push_back(check);
    g.var_neighbors[v].push_back(check);
  }
  for (int v = 0; v < g.variables; ++v) {
    while (g.var_neighbors[v].size() < 4) {
      const int check = g.checks++;
      g.check_neighbors.push_back({v});
      g.var_neighbors[v].push_back(check);
    }
    std::sort(g.var_neighbors[v].begin(), g.var_neighbors[v].end());
  }
  return g;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("exponent matrix parsing, formatting, and validation") {
  const auto e = trapset::parse_exponent_matrix("2 3 7\n0 inf 3\n6 5 inf\n");
  CHECK(e.block_rows == 2);
  CHECK(e.block_cols == 3);
  CHECK(e.lifting == 7);
  CHECK(e.shifts[0] == std::vector<int>{0, kNoShift, 3});
  CHECK(e.shifts[1] == std::vector<int>{6, 5, kNoShift});
  CHECK_FALSE(e.fully_connected());

  const auto text = trapset::format_exponent_matrix(e);
  const auto round = trapset::parse_exponent_matrix(text);
  CHECK(round.shifts == e.shifts);
  CHECK(round.lifting == e.lifting);

  CHECK(all_zero(2, 2, 5).fully_connected());

  CHECK_THROWS_AS(trapset::parse_exponent_matrix(""), trapset::Error);
  CHECK_THROWS_AS(trapset::parse_exponent_matrix("1 1"), trapset::Error);
  CHECK_THROWS_AS(trapset::parse_exponent_matrix("1 2 5\n0"), trapset::Error);
  CHECK_THROWS_AS(trapset::parse_exponent_matrix("1 2 5\n0 5"), trapset::Error);
  CHECK_THROWS_AS(trapset::parse_exponent_matrix("1 2 5\n0 -1"),
                  trapset::Error);
  CHECK_THROWS_AS(trapset::parse_exponent_matrix("1 2 5\n0 x"), trapset::Error);
  CHECK_THROWS_AS(trapset::parse_exponent_matrix("1 2 5\n0 1 2"),
                  trapset::Error);
  CHECK_THROWS_AS(trapset::parse_exponent_matrix("1 1 1\n0"), trapset::Error);

  ExponentMatrix bad = all_zero(2, 2, 4);
  bad.shifts[1][0] = 4;
  CHECK_THROWS_AS(bad.validate(), trapset::Error);
  bad = all_zero(2, 2, 4);
  bad.shifts.pop_back();
  CHECK_THROWS_AS(bad.validate(), trapset::Error);
}

TEST_CASE("lifting expands circulant blocks and tanner() inverts it") {
  // A 1x1 zero-shift block is the identity.
  const auto identity = trapset::lift(make_matrix(1, 1, 3, {{0}}));
  CHECK(identity.rows == 3);
  CHECK(identity.cols == 3);
  CHECK(identity.ones() == 3);
  for (int r = 0; r < 3; ++r) {
    CHECK(identity.at(r, r));
  }

  // A shifted block puts row r's one at column (r + shift) mod p.
  const auto shifted = trapset::lift(make_matrix(1, 1, 5, {{2}}));
  for (int r = 0; r < 5; ++r) {
    CHECK(shifted.at(r, (r + 2) % 5));
  }

  // kNoShift produces an all-zero block.
  const auto gapped = trapset::lift(
      make_matrix(2, 2, 3, {{0, kNoShift}, {1, 2}}));
  CHECK(gapped.rows == 6);
  CHECK(gapped.cols == 6);
  CHECK(gapped.ones() == 9);
  for (int r = 0; r < 3; ++r) {
    for (int c = 3; c < 6; ++c) {
      CHECK_FALSE(gapped.at(r, c));
    }
  }

  const auto tg = trapset::tanner(gapped);
  CHECK(tg.variables == 6);
  CHECK(tg.checks == 6);
  CHECK_FALSE(tg.variable_degree().has_value());
  for (int v = 0; v < 3; ++v) {
    CHECK(tg.var_neighbors[v].size() == 2);  // both blocks of column 0
  }
  for (int v = 3; v < 6; ++v) {
    CHECK(tg.var_neighbors[v].size() == 1);
  }

  // Degrees after lifting match the per-column / per-row counts of
  // connected blocks.
  const auto h1 = trapset::lift(trapset::builtin_code("C1"));
  CHECK(h1.rows == 140);
  CHECK(h1.cols == 280);
  const auto t1 = trapset::tanner(h1);
  CHECK(t1.variable_degree() == 4);
  for (const auto& support : t1.check_neighbors) {
    CHECK(support.size() == 8);
  }

  const auto h2 = trapset::lift(trapset::builtin_code("C2"));
  CHECK(h2.rows == 308);
  CHECK(h2.cols == 539);
  CHECK(trapset::tanner(h2).variable_degree() == 4);
}

TEST_CASE("gf2_rank on hand-checked matrices and the built-in codes") {
  auto rank_of = [](const ExponentMatrix& e) {
    return trapset::gf2_rank(trapset::lift(e));
  };
  CHECK(rank_of(make_matrix(1, 1, 4, {{0}})) == 4);

  // Two identical identity blocks stacked: the rows repeat, rank stays p.
  CHECK(rank_of(make_matrix(2, 1, 4, {{0}, {0}})) == 4);

  trapset::SparseBinaryMatrix tiny;
  tiny.rows = 3;
  tiny.cols = 3;
  tiny.row_support = {{0, 1}, {1, 2}, {0, 2}};
  tiny.col_support = {{0, 2}, {0, 1}, {1, 2}};
  CHECK(trapset::gf2_rank(tiny) == 2);  // rows sum to zero

  // In a fully connected code every block row sums to the all-ones vector,
  // so gamma block rows contribute at most gamma*p - (gamma - 1)
  // independent rows.
  const int rank1 = rank_of(trapset::builtin_code("C1"));
  CHECK(rank1 <= 137);
  CHECK(rank1 == 137);
  const int rank2 = rank_of(trapset::builtin_code("C2"));
  CHECK(rank2 <= 305);
  CHECK(rank2 == 305);
}

TEST_CASE("alist round trip") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "trapset_qc_test.alist";
  const auto h = trapset::lift(trapset::builtin_code("C1"));
  trapset::emit_alist(h, path.string());
  const auto back = trapset::parse_alist(path.string());
  CHECK(back.rows == h.rows);
  CHECK(back.cols == h.cols);
  CHECK(back.row_support == h.row_support);
  CHECK(back.col_support == h.col_support);

  // Zero-padded index lists (the other common alist convention).
  const fs::path padded = fs::temp_directory_path() / "trapset_qc_padded.alist";
  {
    std::ofstream out(padded);
    out << "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 3\n";
  }
  const auto small = trapset::parse_alist(padded.string());
  CHECK(small.cols == 3);
  CHECK(small.rows == 2);
  CHECK(small.col_support == std::vector<std::vector<int>>{{0}, {0, 1}, {1}});
  CHECK(small.row_support == std::vector<std::vector<int>>{{0, 1}, {1, 2}});

  CHECK_THROWS_AS(trapset::parse_alist("/nonexistent/file.alist"),
                  trapset::Error);
}

TEST_CASE("girth of the built-in codes and hand-checked lifts") {
  CHECK(trapset::girth_qc(trapset::builtin_code("C1")) == 6);
  CHECK(trapset::girth_qc(trapset::builtin_code("C2")) == 8);

  // All-zero 2x2, p=2: the alternating sum vanishes on a block 4-cycle.
  CHECK(trapset::girth_qc(all_zero(2, 2, 2)) == 4);

  // A single identity block is a perfect matching: no cycles at all.
  const auto matching = make_matrix(1, 1, 3, {{0}});
  CHECK(trapset::girth_qc(matching) == trapset::Graph::kInfiniteGirth);
  CHECK(trapset::tanner_girth(trapset::tanner(trapset::lift(matching))) ==
        trapset::Graph::kInfiniteGirth);

  // Two columns, shifts forcing ten alternating steps before the sum is
  // divisible by p: the lift is one Hamiltonian 20-cycle.
  const auto ring = make_matrix(2, 2, 5, {{0, 0}, {0, 1}});
  CHECK(trapset::girth_qc(ring) == 20);
  CHECK(trapset::tanner_girth(trapset::tanner(trapset::lift(ring))) == 20);
}

TEST_CASE("block-level girth agrees with BFS on the lifted graph") {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 50; ++trial) {
    const int gamma = 2 + static_cast<int>(rng() % 3);  // 2..4
    const int eta = 2 + static_cast<int>(rng() % 7);    // 2..8
    const int p = 2 + static_cast<int>(rng() % 49);     // 2..50
    std::vector<std::vector<int>> shifts(gamma, std::vector<int>(eta));
    for (auto& row : shifts) {
      for (auto& entry : row) {
        entry = (rng() % 10 == 0) ? kNoShift
                                  : static_cast<int>(rng() % p);
      }
    }
    const auto e = make_matrix(gamma, eta, p, std::move(shifts));
    const int block_level = trapset::girth_qc(e);
    const int lifted = trapset::tanner_girth(trapset::tanner(trapset::lift(e)));
    CAPTURE(trial);
    CAPTURE(gamma);
    CAPTURE(eta);
    CAPTURE(p);
    CHECK(block_level == lifted);
  }
}

TEST_CASE("cycle enumeration: caps, witness validity, and exact counts") {
  CHECK_THROWS_AS(trapset::enumerate_cycles(all_zero(2, 2, 2), 14),
                  trapset::ResourceLimitError);

  // Girth 8 leaves nothing at length 6; a matching has no cycles at all.
  CHECK(trapset::enumerate_cycles(trapset::builtin_code("C2"), 6).empty());
  CHECK(trapset::enumerate_cycles(make_matrix(1, 1, 2, {{0}}), 4).empty());

  // All-zero 2x2 with p=2 lifts to two disjoint K_{2,2} copies: one
  // 4-cycle each, swapped by the shift automorphism.
  const auto squares = trapset::enumerate_cycles(all_zero(2, 2, 2), 4);
  REQUIRE(squares.size() == 1);
  CHECK(squares[0].length == 4);
  CHECK(squares[0].orbit_size == 2);

  // All-zero 4x4 with p=2 lifts to two disjoint K_{4,4} copies, whose
  // 4-, 6-, and 8-cycle counts are classical.
  const auto e44 = all_zero(4, 4, 2);
  const auto cycles = trapset::enumerate_cycles(e44, 8);
  std::map<int, long long> raw_by_length;
  for (const auto& witness : cycles) {
    raw_by_length[witness.length] += witness.orbit_size;
  }
  CHECK(raw_by_length[4] == 2 * knn_cycles(4, 2));
  CHECK(raw_by_length[6] == 2 * knn_cycles(4, 3));
  CHECK(raw_by_length[8] == 2 * knn_cycles(4, 4));

  // Every witness is a genuine simple cycle of the lifted graph.
  const auto h = trapset::lift(e44);
  for (const auto& witness : cycles) {
    const int k = witness.length / 2;
    REQUIRE(static_cast<int>(witness.variables.size()) == k);
    REQUIRE(static_cast<int>(witness.checks.size()) == k);
    std::set<int> distinct_vars(witness.variables.begin(),
                                witness.variables.end());
    std::set<int> distinct_checks(witness.checks.begin(),
                                  witness.checks.end());
    CHECK(static_cast<int>(distinct_vars.size()) == k);
    CHECK(static_cast<int>(distinct_checks.size()) == k);
    REQUIRE(static_cast<int>(witness.block_trace.size()) == 2 * k);
    for (int t = 0; t < k; ++t) {
      const int check = witness.checks[t];
      const int from = witness.variables[t];
      const int to = witness.variables[(t + 1) % k];
      CHECK(h.at(check, from));
      CHECK(h.at(check, to));
      CHECK(witness.block_trace[2 * t] ==
            std::pair<int, int>(check / 2, from / 2));
      CHECK(witness.block_trace[2 * t + 1] ==
            std::pair<int, int>(check / 2, to / 2));
    }
    CHECK(witness.orbit_size >= 1);
    CHECK(witness.orbit_size <= 2);
  }

  // The girth-6 code has 6-cycles; counts match an independent DFS
  // enumeration on the lifted graph.
  const auto c1 = trapset::builtin_code("C1");
  const auto six = trapset::enumerate_cycles(c1, 6);
  REQUIRE_FALSE(six.empty());
  long long raw = 0;
  for (const auto& witness : six) {
    CHECK(witness.length == 6);
    CHECK(witness.orbit_size == 35);
    raw += witness.orbit_size;
  }
  CHECK(raw == count_cycles_direct(trapset::tanner(trapset::lift(c1)), 6));
}

TEST_CASE("shared 8-cycle detection") {
  // Girth above 8 leaves no 8-cycles to pair up.
  CHECK(trapset::detect_shared_8cycles(
            make_matrix(2, 2, 5, {{0, 0}, {0, 1}}))
            .empty());

  // Non-variable-regular codes are rejected.
  CHECK_THROWS_AS(trapset::detect_shared_8cycles(
                      make_matrix(2, 2, 3, {{0, kNoShift}, {1, 2}})),
                  trapset::Error);

  // Two disjoint K_{4,4} copies: all 72 8-cycles of a copy run through all
  // four of its variables, so every pair within a copy overlaps; pair
  // orbits have size 2 (the shift swaps the copies).
  const auto pairs = trapset::detect_shared_8cycles(all_zero(4, 4, 2));
  const long long per_copy = knn_cycles(4, 4);
  REQUIRE(static_cast<long long>(pairs.size()) ==
          per_copy * (per_copy - 1) / 2);
  long long raw_pairs = 0;
  for (const auto& pair : pairs) {
    CHECK(pair.shared_variables == 4);
    CHECK(pair.orbit_size == 2);
    CHECK(pair.pattern == trapset::SharedPattern::other);
    CHECK((pair.first.variables != pair.second.variables ||
           pair.first.checks != pair.second.checks));
    raw_pairs += pair.orbit_size;
  }
  CHECK(raw_pairs == 2 * per_copy * (per_copy - 1) / 2);

  // The bundled girth-8 code C2 carries 12320 distinct 8-cycles.  With
  // only 539 variables and four variables per cycle, at most 134 cycles
  // could ever be pairwise disjoint on variables, so a large shared-cycle
  // census is forced.  All counts below are regression pins, re-derived
  // definitionally: the raw cycle count is confirmed by an independent
  // DFS on the lifted graph, and the per-variable incidences are exact
  // per block column by quasi-cyclic symmetry.
  const auto c2 = trapset::builtin_code("C2");
  const auto tanner_c2 = trapset::tanner(trapset::lift(c2));
  std::map<int, int> incidence;
  const long long direct = count_cycles_direct(tanner_c2, 8, &incidence);
  long long via_orbits = 0;
  int full_orbits = 0;
  for (const auto& witness : trapset::enumerate_cycles(c2, 8)) {
    CHECK(witness.orbit_size == 77);
    via_orbits += witness.orbit_size;
    ++full_orbits;
  }
  CHECK(direct == via_orbits);
  CHECK(direct == 12320);
  CHECK(full_orbits == 160);
  const int per_column[7] = {87, 84, 88, 97, 88, 96, 100};
  for (int var = 0; var < tanner_c2.variables; ++var) {
    const auto entry = incidence.find(var);
    const int count = entry == incidence.end() ? 0 : entry->second;
    CHECK(count == per_column[var / 77]);
  }

  const auto shared = trapset::detect_shared_8cycles(c2);
  CHECK(shared.size() == 26729);
  long long shared_raw = 0;
  std::map<trapset::SharedPattern, int> by_pattern;
  for (const auto& pair : shared) {
    CHECK(pair.orbit_size == 77);
    shared_raw += pair.orbit_size;
    ++by_pattern[pair.pattern];
    CHECK(pair.shared_variables >= 1);
  }
  CHECK(shared_raw == 26729LL * 77);
  CHECK(by_pattern[trapset::SharedPattern::theta222] == 54);
  CHECK(by_pattern[trapset::SharedPattern::theta133] == 2212);
  CHECK(by_pattern[trapset::SharedPattern::d440] == 24463);
  CHECK(by_pattern[trapset::SharedPattern::other] == 0);

  // Spot-check the first reported pair definitionally: two valid,
  // distinct 8-cycles of the lifted graph overlapping in a variable.
  {
    REQUIRE(!shared.empty());
    const auto& pair = shared.front();
    const auto h2 = trapset::lift(c2);
    for (const auto* cycle : {&pair.first, &pair.second}) {
      REQUIRE(cycle->variables.size() == 4);
      REQUIRE(cycle->checks.size() == 4);
      for (int t = 0; t < 4; ++t) {
        CHECK(h2.at(cycle->checks[t], cycle->variables[t]));
        CHECK(h2.at(cycle->checks[t], cycle->variables[(t + 1) % 4]));
      }
    }
    std::set<int> first_vars(pair.first.variables.begin(),
                             pair.first.variables.end());
    int overlap = 0;
    for (int v : pair.second.variables) {
      overlap += first_vars.count(v);
    }
    CHECK(overlap == pair.shared_variables);
    CHECK(overlap >= 1);
  }
}

TEST_CASE("chorded-cycle substructure patterns match the named graphs") {
  using trapset::canonical_form;
  using trapset::make_named;
  using trapset::NamedKind;
  CHECK(canonical_form(make_named(NamedKind::t_pattern_vn, 1)) ==
        canonical_form(make_named(NamedKind::g1)));
  CHECK(canonical_form(make_named(NamedKind::t_pattern_vn, 2)) ==
        canonical_form(make_named(NamedKind::g2)));
  CHECK(canonical_form(make_named(NamedKind::t_pattern_vn, 3)) ==
        canonical_form(make_named(NamedKind::g3)));
}

TEST_CASE("chorded-cycle substructure detection") {
  // The bundled girth-6 code C1 contains all three chorded-cycle
  // patterns; the orbit counts are regression pins.  Every reported
  // witness is re-verified definitionally on the lifted graph: its
  // checks each meet exactly the two endpoint variables of one pattern
  // edge, and together those edges reproduce the pattern exactly.
  const auto c1 = trapset::builtin_code("C1");
  const auto lifted_c1 = trapset::tanner(trapset::lift(c1));
  const int expected_orbits[3] = {3, 45, 41};
  const TVariant all_variants[3] = {TVariant::t1, TVariant::t2, TVariant::t3};
  for (int i = 0; i < 3; ++i) {
    const auto pattern =
        trapset::make_named(trapset::NamedKind::t_pattern_vn, i + 1);
    const auto hits = trapset::detect_T(c1, all_variants[i]);
    CHECK(static_cast<int>(hits.size()) == expected_orbits[i]);
    for (const auto& witness : hits) {
      CHECK(witness.orbit_size == 35);
      REQUIRE(static_cast<int>(witness.variables.size()) == pattern.order());
      REQUIRE(static_cast<int>(witness.checks.size()) == pattern.size());
      trapset::Graph vn_image(pattern.order());
      for (int check : witness.checks) {
        std::vector<int> inside;
        for (int v : lifted_c1.check_neighbors[check]) {
          const auto where = std::find(witness.variables.begin(),
                                       witness.variables.end(), v);
          if (where != witness.variables.end()) {
            inside.push_back(
                static_cast<int>(where - witness.variables.begin()));
          }
        }
        REQUIRE(inside.size() == 2);
        vn_image.add_edge(inside[0], inside[1]);
      }
      CHECK(trapset::canonical_form(vn_image) ==
            trapset::canonical_form(pattern));
    }
  }

  // Planted subdivisions are recovered exactly once, and only by their
  // own variant: none of the three patterns contains another.
  const trapset::Graph patterns[3] = {
      trapset::make_named(trapset::NamedKind::t_pattern_vn, 1),
      trapset::make_named(trapset::NamedKind::t_pattern_vn, 2),
      trapset::make_named(trapset::NamedKind::t_pattern_vn, 3)};
  const TVariant variants[3] = {TVariant::t1, TVariant::t2, TVariant::t3};
  for (int planted = 0; planted < 3; ++planted) {
    const auto g = plant_pattern(patterns[planted]);
    CHECK(g.variable_degree() == 4);
    CHECK(trapset::tanner_girth(g) == 6);
    for (int sought = 0; sought < 3; ++sought) {
      const auto hits = trapset::detect_T(g, variants[sought]);
      CAPTURE(planted);
      CAPTURE(sought);
      if (sought == planted) {
        REQUIRE(hits.size() == 1);
        const int n = patterns[planted].order();
        const int m = patterns[planted].size();
        std::vector<int> all_vars(n);
        for (int v = 0; v < n; ++v) {
          all_vars[v] = v;
        }
        CHECK(hits[0].variables == all_vars);
        // The pattern's edge checks were created first, before padding.
        std::vector<int> edge_checks(m);
        for (int c = 0; c < m; ++c) {
          edge_checks[c] = c;
        }
        CHECK(hits[0].checks == edge_checks);
        CHECK(hits[0].orbit_size == 1);
      } else {
        CHECK(hits.empty());
      }
    }
  }

  // A perfect matching is tree-like: variable-regular, infinite girth,
  // and of course pattern-free.
  const auto matching = trapset::tanner(trapset::lift(make_matrix(1, 1, 3, {{0}})));
  CHECK(trapset::detect_T(matching, TVariant::t1).empty());

  // Preconditions: variable-regularity and girth at least 6.
  CHECK_THROWS_AS(trapset::detect_T(
                      make_matrix(2, 2, 3, {{0, kNoShift}, {1, 2}}),
                      TVariant::t1),
                  trapset::Error);
  CHECK_THROWS_AS(trapset::detect_T(all_zero(2, 2, 2), TVariant::t1),
                  trapset::Error);
}

TEST_CASE("substructure detection groups lifted witnesses into shift orbits") {
  // Lift the padded subdivision of the 5-vertex pattern as a protograph
  // with p = 2 and zero shifts: the result is two disjoint copies, one
  // witness each, forming a single orbit of size 2.
  const auto pattern = trapset::make_named(trapset::NamedKind::t_pattern_vn, 1);
  const int n = pattern.order();
  std::vector<std::vector<int>> rows;
  for (const auto& [u, v] : pattern.edges()) {
    std::vector<int> row(n, kNoShift);
    row[u] = 0;
    row[v] = 0;
    rows.push_back(std::move(row));
  }
  std::vector<int> degree(n, 0);
  for (const auto& [u, v] : pattern.edges()) {
    ++degree[u];
    ++degree[v];
  }
  for (int v = 0; v < n; ++v) {
    for (int pad = degree[v]; pad < 4; ++pad) {
      std::vector<int> row(n, kNoShift);
      row[v] = 0;
      rows.push_back(std::move(row));
    }
  }
  const int block_rows = static_cast<int>(rows.size());
  const auto proto = make_matrix(block_rows, n, 2, std::move(rows));
  CHECK(trapset::girth_qc(proto) == 6);

  const auto hits = trapset::detect_T(proto, TVariant::t1);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].orbit_size == 2);
  // The representative is the copy on even residues.
  for (int var : hits[0].variables) {
    CHECK(var % 2 == 0);
  }
  CHECK(trapset::detect_T(proto, TVariant::t2).empty());
  CHECK(trapset::detect_T(proto, TVariant::t3).empty());
}

TEST_CASE("trapping set search inside a lifted code") {
  // Preconditions and caps.
  const auto ring = make_matrix(2, 2, 5, {{0, 0}, {0, 1}});
  CHECK_THROWS_AS(trapset::ets_search_in_code(ring, 13, 0),
                  trapset::ResourceLimitError);
  CHECK_THROWS_AS(trapset::ets_search_in_code(ring, 0, 0), trapset::Error);
  CHECK_THROWS_AS(trapset::ets_search_in_code(
                      make_matrix(2, 2, 3, {{0, kNoShift}, {1, 2}}), 4, 4),
                  trapset::Error);
  CHECK_THROWS_AS(trapset::ets_search_in_code(all_zero(2, 2, 2), 4, 4),
                  trapset::Error);
  CHECK_THROWS_AS(trapset::ets_search_in_code(ring, 12, 2, 3),
                  trapset::ResourceLimitError);

  // The girth-8 code: arithmetic alone rules out every cell with
  // a <= 7 and b <= 3 (the edge demand exceeds the triangle-free cap).
  CHECK(trapset::ets_search_in_code(trapset::builtin_code("C2"), 7, 3).empty());

  // The 20-cycle lift: its only trapping set with b = 0 is the full
  // variable set, whose VN graph is the 10-cycle with spectral radius 1.
  const auto full = trapset::ets_search_in_code(ring, 12, 0);
  REQUIRE(full.size() == 1);
  CHECK(full[0].a == 10);
  CHECK(full[0].b == 0);
  CHECK(full[0].orbit_size == 1);
  std::vector<int> everything(10);
  for (int v = 0; v < 10; ++v) {
    everything[v] = v;
  }
  CHECK(full[0].variables == everything);
  CHECK(trapset::canonical_form(full[0].vn_graph) ==
        trapset::canonical_form(trapset::cycle_graph(10)));
  CHECK(full[0].rho == doctest::Approx(1.0).epsilon(1e-8));

  // Allowing b = 2 adds every path segment of the 20-cycle: two orbits of
  // size 5 for each length a = 1..9, all with tree VN graphs (radius 0).
  const auto segments = trapset::ets_search_in_code(ring, 12, 2);
  REQUIRE(segments.size() == 19);
  const auto tg = trapset::tanner(trapset::lift(ring));
  std::map<int, int> orbits_per_size;
  long long raw = 0;
  for (const auto& record : segments) {
    CHECK(is_trapping_set(tg, record.variables, record.b));
    raw += record.orbit_size;
    if (record.a < 10) {
      CHECK(record.b == 2);
      CHECK(record.orbit_size == 5);
      CHECK(record.rho == 0.0);
      CHECK(trapset::canonical_form(record.vn_graph) ==
            trapset::canonical_form(trapset::path_graph(record.a)));
      ++orbits_per_size[record.a];
    }
  }
  for (int a = 1; a <= 9; ++a) {
    CHECK(orbits_per_size[a] == 2);
  }
  CHECK(raw == 10 * 9 + 1);

  // Quasi-cyclic symmetry: shifted images of any reported set are
  // trapping sets with the same parameters.
  for (const auto& record : segments) {
    for (int d = 1; d < 5; ++d) {
      std::vector<int> shifted;
      for (int v : record.variables) {
        shifted.push_back((v / 5) * 5 + (v % 5 + d) % 5);
      }
      CHECK(is_trapping_set(tg, shifted, record.b));
    }
  }
}

TEST_CASE("built-in codes match their data files") {
  CHECK_THROWS_AS(trapset::builtin_code("C3"), trapset::Error);
  const auto c1 = trapset::builtin_code("C1");
  const auto c2 = trapset::builtin_code("C2");
  CHECK(c1.fully_connected());
  CHECK(c2.fully_connected());

  const auto file1 = trapset::parse_exponent_matrix(
      slurp(std::string(TRAPSET_SOURCE_DIR) + "/data/codes/c1.txt"));
  CHECK(file1.shifts == c1.shifts);
  CHECK(file1.lifting == c1.lifting);
  const auto file2 = trapset::parse_exponent_matrix(
      slurp(std::string(TRAPSET_SOURCE_DIR) + "/data/codes/c2.txt"));
  CHECK(file2.shifts == c2.shifts);
  CHECK(file2.lifting == c2.lifting);
}
