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
#include <set>
#include <string>
#include <vector>

#include "trapset/enumerate.hpp"
#include "trapset/graph.hpp"

namespace {

using trapset::EnumConstraints;
using trapset::enumerate_graphs;
using trapset::Graph;

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

std::set<std::string> form_set(const std::vector<Graph>& graphs) {
  std::set<std::string> forms;
  for (const Graph& g : graphs) forms.insert(trapset::canonical_form(g));
  return forms;
}

bool satisfies(const Graph& g, const EnumConstraints& c) {
  if (c.edge_count && g.size() != *c.edge_count) return false;
  if (c.max_degree && g.max_degree() > *c.max_degree) return false;
  if (c.min_degree && g.min_degree() < *c.min_degree) return false;
  if (c.girth_at_least && g.girth() < *c.girth_at_least) return false;
  if (c.connected && !g.is_connected()) return false;
  for (const Graph& pattern : c.forbidden_subgraphs) {
    if (trapset::contains_subgraph(g, pattern)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("unconstrained counts match the catalogue of small graphs") {
  const std::vector<std::size_t> expected = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) {
    CHECK(enumerate_graphs(n).size() == expected[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("connected counts match the catalogue") {
  EnumConstraints c;
  c.connected = true;
  const std::vector<std::size_t> expected = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_graphs(n, c).size() ==
          expected[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("triangle-free counts match the catalogue") {
  EnumConstraints c;
  c.girth_at_least = 4;
  const std::vector<std::size_t> expected = {2, 3, 7, 14, 38, 107};
  for (int n = 2; n <= 7; ++n) {
    CHECK(enumerate_graphs(n, c).size() ==
          expected[static_cast<std::size_t>(n - 2)]);
  }
}

TEST_CASE("the cubic graphs on six vertices are K33 and the prism") {
  EnumConstraints c;
  c.edge_count = 9;
  c.max_degree = 3;
  c.min_degree = 3;
  auto cubic = enumerate_graphs(6, c);
  REQUIRE(cubic.size() == 2);
  auto forms = form_set(cubic);
  CHECK(forms.count(
      trapset::canonical_form(trapset::make_named(trapset::NamedKind::k33))));
  CHECK(forms.count(
      trapset::canonical_form(trapset::make_named(trapset::NamedKind::h3))));
}

TEST_CASE("the unique cubic girth-5 graph on ten vertices") {
  EnumConstraints c;
  c.edge_count = 15;
  c.max_degree = 3;
  c.min_degree = 3;
  c.girth_at_least = 5;
  c.connected = true;
  auto cages = enumerate_graphs(10, c);
  REQUIRE(cages.size() == 1);
  CHECK(trapset::is_isomorphic(cages.front(), petersen()));
}

TEST_CASE("results agree with filtering the full catalogue") {
  // Enumerate everything once, then check that each constrained run returns
  // exactly the catalogue entries passing the constraint predicate.
  for (int n = 4; n <= 6; ++n) {
    auto all = enumerate_graphs(n);
    std::vector<EnumConstraints> cases(8);
    cases[0].girth_at_least = 4;
    cases[1].girth_at_least = 5;
    cases[2].max_degree = 3;
    cases[3].min_degree = 2;
    cases[4].connected = true;
    cases[4].edge_count = n + 1;
    cases[5].forbidden_subgraphs = {trapset::cycle_graph(4)};
    cases[6].forbidden_subgraphs = {trapset::cycle_graph(3)};
    cases[6].connected = true;
    cases[7].edge_count = 2 * n - 3;
    cases[7].max_degree = n - 2;
    cases[7].min_degree = 2;
    for (const EnumConstraints& c : cases) {
      std::set<std::string> expected;
      for (const Graph& g : all) {
        if (satisfies(g, c)) expected.insert(trapset::canonical_form(g));
      }
      CHECK(form_set(enumerate_graphs(n, c)) == expected);
    }
  }
}

TEST_CASE("forbidding C4 is weaker than requiring girth 5") {
  // A C4-free graph may still contain triangles, so on five vertices the two
  // constraints disagree.
  EnumConstraints girth5;
  girth5.girth_at_least = 5;
  EnumConstraints no_c4;
  no_c4.forbidden_subgraphs = {trapset::cycle_graph(4)};
  auto strict = enumerate_graphs(5, girth5);
  auto loose = enumerate_graphs(5, no_c4);
  CHECK(strict.size() < loose.size());
  auto strict_forms = form_set(strict);
  for (const std::string& form : strict_forms) {
    CHECK(form_set(loose).count(form));
  }
}

TEST_CASE("output is sorted and duplicate-free") {
  auto graphs = enumerate_graphs(6);
  std::vector<std::string> forms;
  for (const Graph& g : graphs) forms.push_back(trapset::canonical_form(g));
  CHECK(std::is_sorted(forms.begin(), forms.end()));
  CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
}

TEST_CASE("vertex ceiling raises ResourceLimitError") {
  CHECK_THROWS_AS(enumerate_graphs(15), trapset::ResourceLimitError);
  EnumConstraints c;
  c.edge_count = 0;
  CHECK_NOTHROW(enumerate_graphs(15, c, 15));
  CHECK(enumerate_graphs(15, c, 15).size() == 1);
  CHECK_THROWS_AS(enumerate_graphs(-1), trapset::Error);
}

TEST_CASE("degenerate constraints") {
  EnumConstraints impossible;
  impossible.edge_count = 100;
  CHECK(enumerate_graphs(5, impossible).empty());

  EnumConstraints empty_forbidden;
  empty_forbidden.forbidden_subgraphs = {Graph(2)};  // two isolated vertices
  CHECK(enumerate_graphs(5, empty_forbidden).empty());
  CHECK(enumerate_graphs(1, empty_forbidden).size() == 1);

  EnumConstraints bad;
  bad.edge_count = -1;
  CHECK_THROWS_AS(enumerate_graphs(4, bad), trapset::Error);

  CHECK(enumerate_graphs(0).size() == 1);
}
