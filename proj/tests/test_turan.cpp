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

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "trapset/graph.hpp"
#include "trapset/turan.hpp"

namespace {

using trapset::Graph;
using trapset::TuranQuery;
using trapset::TuranResult;
using trapset::TuranTarget;

Graph target_graph(TuranTarget t) {
  switch (t) {
    case TuranTarget::g1:
      return trapset::make_named(trapset::NamedKind::g1);
    case TuranTarget::g2:
      return trapset::make_named(trapset::NamedKind::g2);
    default:
      return trapset::make_named(trapset::NamedKind::g3);
  }
}

std::set<std::string> class_forms(const TuranResult& r) {
  REQUIRE(r.extremal_classes.has_value());
  std::set<std::string> forms;
  for (const Graph& g : *r.extremal_classes) {
    forms.insert(trapset::canonical_form(g));
  }
  return forms;
}

}  // namespace

TEST_CASE("closed-form upper bounds evaluate correctly") {
  CHECK(trapset::theta222_upper(5) ==
        doctest::Approx(5.0 * (std::sqrt(33.0) + 1.0) / 4.0));
  CHECK(trapset::theta222_upper(5) == doctest::Approx(8.43069).epsilon(1e-5));
  CHECK(std::floor(trapset::theta222_upper(5)) == 8.0);
  CHECK(trapset::theta222_upper(8) ==
        doctest::Approx(2.0 * (std::sqrt(57.0) + 1.0)));
  CHECK(std::floor(trapset::theta222_upper(8)) == 17.0);
  CHECK_THROWS_AS(trapset::theta222_upper(4), trapset::Error);

  CHECK(trapset::girth8_family_upper(10) ==
        doctest::Approx(10.0 * (std::sqrt(217.0) - 1.0) / 8.0));
  CHECK(std::floor(trapset::girth8_family_upper(10)) == 17.0);
  CHECK(trapset::girth8_family_upper(5) ==
        doctest::Approx(5.0 * (std::sqrt(97.0) - 1.0) / 8.0));
  CHECK(std::floor(trapset::girth8_family_upper(5)) == 5.0);
  CHECK_THROWS_AS(trapset::girth8_family_upper(4), trapset::Error);
}

TEST_CASE("the girth-8 obstruction family has the right members") {
  auto family = trapset::girth8_obstruction_family();
  REQUIRE(family.size() == 4);
  CHECK(trapset::is_isomorphic(family[0], trapset::cycle_graph(3)));
  CHECK(trapset::is_isomorphic(family[1],
                               trapset::complete_bipartite_graph(2, 3)));
  CHECK(family[2].order() == 6);  // theta(1,3,3)
  CHECK(family[2].size() == 7);
  CHECK(family[3].order() == 7);  // two 4-cycles sharing a vertex
  CHECK(family[3].size() == 8);
  CHECK(family[3].max_degree() == 4);
}

TEST_CASE("induction margin reproduces the known bound sequences") {
  auto f_g1 = [](long long k) { return (k * k + k) / 4; };
  for (long long k : {4, 8, 12, 16}) {
    CHECK(trapset::induction_margin(f_g1, k) == -1);
    CHECK(trapset::induction_case(f_g1, k) ==
          trapset::InductionCase::zero_or_minus_one);
  }
  for (long long k : {5, 6, 7, 9, 10, 11}) {
    CHECK(trapset::induction_margin(f_g1, k) > 0);
    CHECK(trapset::induction_case(f_g1, k) == trapset::InductionCase::strict);
  }

  auto f_g2 = [](long long k) { return k * k / 4 + 1; };
  for (long long k : {5, 7, 9, 11}) {
    CHECK(trapset::induction_margin(f_g2, k) == k - 3);
  }

  auto f_g3 = [](long long k) { return k * k / 4 + (k + 1) / 2 - 1; };
  for (long long k : {5, 7, 9, 11}) {
    CHECK(trapset::induction_margin(f_g3, k) == 0);
    CHECK(trapset::induction_case(f_g3, k) ==
          trapset::InductionCase::zero_or_minus_one);
  }

  // A sequence growing too slowly gives the induction nothing.
  auto linear = [](long long k) { return k; };
  CHECK(trapset::induction_margin(linear, 6) == -2);
  CHECK(trapset::induction_case(linear, 6) ==
        trapset::InductionCase::inapplicable);
}

TEST_CASE("exact values follow the closed forms") {
  for (int n = 5; n <= 16; ++n) {
    CHECK(trapset::ex_exact(TuranTarget::g1, n).value ==
          static_cast<double>((n * n + n) / 4));
  }
  CHECK(trapset::ex_exact(TuranTarget::g2, 6).value == 11.0);
  for (int n = 7; n <= 16; ++n) {
    CHECK(trapset::ex_exact(TuranTarget::g2, n).value ==
          static_cast<double>(n * n / 4 + 1));
  }
  CHECK(trapset::ex_exact(TuranTarget::g3, 6).value == 12.0);
  CHECK(trapset::ex_exact(TuranTarget::g3, 7).value == 15.0);
  CHECK(trapset::ex_exact(TuranTarget::g3, 8).value == 19.0);
  for (int n = 9; n <= 16; ++n) {
    CHECK(trapset::ex_exact(TuranTarget::g3, n).value ==
          static_cast<double>(n * n / 4 + (n + 1) / 2 - 1));
  }

  CHECK_THROWS_AS(trapset::ex_exact(TuranTarget::g1, 4), trapset::Error);
  CHECK_THROWS_AS(trapset::ex_exact(TuranTarget::g2, 5), trapset::Error);
  CHECK_THROWS_AS(trapset::ex_exact(TuranTarget::g3, 5), trapset::Error);
}

TEST_CASE("every characterised extremal graph is free with full edge count") {
  struct Case {
    TuranTarget target;
    int n;
  };
  std::vector<Case> cases;
  for (int n = 5; n <= 12; ++n) cases.push_back({TuranTarget::g1, n});
  cases.push_back({TuranTarget::g2, 6});
  for (int n = 6; n <= 12; ++n) cases.push_back({TuranTarget::g3, n});
  for (const Case& c : cases) {
    TuranResult r = trapset::ex_exact(c.target, c.n);
    Graph pattern = target_graph(c.target);
    REQUIRE(r.extremal_classes.has_value());
    CHECK_FALSE(r.extremal_classes->empty());
    for (const Graph& g : *r.extremal_classes) {
      CHECK(g.order() == c.n);
      CHECK(static_cast<double>(g.size()) == r.value);
      CHECK_FALSE(trapset::contains_subgraph(g, pattern));
    }
    // Classes are pairwise non-isomorphic.
    CHECK(class_forms(r).size() == r.extremal_classes->size());
  }

  // No characterisation is claimed for the second pattern beyond order 6.
  CHECK_FALSE(trapset::ex_exact(TuranTarget::g2, 7).extremal_classes.has_value());
  CHECK_FALSE(trapset::ex_exact(TuranTarget::g2, 9).extremal_classes.has_value());
}

TEST_CASE("class multiplicities follow the order mod 4 pattern") {
  CHECK(trapset::ex_exact(TuranTarget::g1, 5).extremal_classes->size() == 2);
  CHECK(trapset::ex_exact(TuranTarget::g1, 6).extremal_classes->size() == 2);
  CHECK(trapset::ex_exact(TuranTarget::g1, 7).extremal_classes->size() == 1);
  CHECK(trapset::ex_exact(TuranTarget::g1, 8).extremal_classes->size() == 1);
  CHECK(trapset::ex_exact(TuranTarget::g1, 9).extremal_classes->size() == 2);
  CHECK(trapset::ex_exact(TuranTarget::g3, 7).extremal_classes->size() == 3);
  CHECK(trapset::ex_exact(TuranTarget::g3, 8).extremal_classes->size() == 2);
  CHECK(trapset::ex_exact(TuranTarget::g3, 9).extremal_classes->size() == 1);
  CHECK(trapset::ex_exact(TuranTarget::g3, 10).extremal_classes->size() == 1);
}

TEST_CASE("brute force agrees with the closed forms on small orders") {
  for (int n = 5; n <= 7; ++n) {
    TuranQuery q{{target_graph(TuranTarget::g1)}, n};
    CHECK(trapset::brute_force_ex(q).value ==
          trapset::ex_exact(TuranTarget::g1, n).value);
  }
  for (int n = 6; n <= 7; ++n) {
    for (TuranTarget t : {TuranTarget::g2, TuranTarget::g3}) {
      TuranQuery q{{target_graph(t)}, n};
      CHECK(trapset::brute_force_ex(q).value == trapset::ex_exact(t, n).value);
    }
  }
}

TEST_CASE("brute force finds a third extremal class at order five") {
  // The matching-join characterisation lists two classes at order 5, but
  // K4 with a pendant edge is also free of the apex-over-path pattern with
  // the same 7 edges, so the search reports three. Documented as a known
  // discrepancy; the acceptance runner surfaces it.
  TuranQuery q{{target_graph(TuranTarget::g1)}, 5};
  TuranResult brute = trapset::brute_force_ex(q);
  CHECK(brute.value == 7.0);
  REQUIRE(brute.extremal_classes.has_value());
  CHECK(brute.extremal_classes->size() == 3);

  Graph k4_pendant = trapset::complete_graph(5);
  for (int v = 1; v <= 3; ++v) k4_pendant.remove_edge(v, 4);
  CHECK(k4_pendant.size() == 7);
  auto forms = class_forms(brute);
  CHECK(forms.count(trapset::canonical_form(k4_pendant)) == 1);
  // Both characterised classes are among the three.
  TuranResult characterised = trapset::ex_exact(TuranTarget::g1, 5);
  for (const Graph& g : *characterised.extremal_classes) {
    CHECK(forms.count(trapset::canonical_form(g)) == 1);
  }
}

TEST_CASE("brute-force extremal classes match the characterisation at order 7") {
  TuranQuery q{{target_graph(TuranTarget::g3)}, 7};
  TuranResult brute = trapset::brute_force_ex(q);
  CHECK(brute.value == 15.0);
  CHECK(class_forms(brute) ==
        class_forms(trapset::ex_exact(TuranTarget::g3, 7)));

  TuranQuery q2{{target_graph(TuranTarget::g2)}, 6};
  TuranResult brute2 = trapset::brute_force_ex(q2);
  CHECK(brute2.value == 11.0);
  CHECK(class_forms(brute2) ==
        class_forms(trapset::ex_exact(TuranTarget::g2, 6)));
}

TEST_CASE("brute-force maxima respect the closed-form upper bounds") {
  Graph theta = trapset::theta_graph(2, 2, 2);
  auto family = trapset::girth8_obstruction_family();
  double last_theta = -1.0, last_family = -1.0;
  for (int n = 5; n <= 7; ++n) {
    TuranResult t = trapset::brute_force_ex(TuranQuery{{theta}, n});
    CHECK(t.value <= std::floor(trapset::theta222_upper(n)));
    TuranResult h = trapset::brute_force_ex(TuranQuery{family, n});
    CHECK(h.value <= std::floor(trapset::girth8_family_upper(n)));
    // Monotone in n.
    CHECK(t.value >= last_theta);
    CHECK(h.value >= last_family);
    last_theta = t.value;
    last_family = h.value;
  }
}

TEST_CASE("brute force validates its query") {
  Graph g1 = target_graph(TuranTarget::g1);
  CHECK_THROWS_AS(trapset::brute_force_ex(TuranQuery{{g1}, 9}),
                  trapset::ResourceLimitError);
  CHECK_NOTHROW(trapset::brute_force_ex(TuranQuery{{g1}, 5}, 9));
  CHECK_THROWS_AS(trapset::brute_force_ex(TuranQuery{{}, 5}), trapset::Error);
  CHECK_THROWS_AS(trapset::brute_force_ex(TuranQuery{{g1}, 2}), trapset::Error);
}
