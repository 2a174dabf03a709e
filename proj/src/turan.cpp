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

#include "trapset/turan.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace trapset {

namespace {

void require_order(int n, int minimum, const std::string& what) {
  if (n < minimum) {
    throw Error(what + " requires order >= " + std::to_string(minimum) +
                ", got " + std::to_string(n));
  }
  if (n > Graph::kMaxVertices) {
    throw Error(what + ": order " + std::to_string(n) +
                " exceeds the 64-vertex graph limit");
  }
}

// t disjoint copies of K2, optionally with one extra isolated vertex.
Graph matching_graph(int t, bool plus_isolated) {
  Graph g(2 * t + (plus_isolated ? 1 : 0));
  for (int i = 0; i < t; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph k3_plus_k1() { return disjoint_union(complete_graph(3), Graph(1)); }

std::vector<Graph> g1_extremal_classes(int n) {
  // The extremal g1-free graphs are joins of a near-perfect matching with an
  // independent set; which matchings appear depends on n mod 4.
  int t = n / 4;
  std::vector<Graph> out;
  switch (n % 4) {
    case 0:
      out.push_back(join(matching_graph(t, false), Graph(2 * t)));
      break;
    case 1:
      out.push_back(join(matching_graph(t, false), Graph(2 * t + 1)));
      out.push_back(join(matching_graph(t, true), Graph(2 * t)));
      break;
    case 2:
      out.push_back(join(matching_graph(t + 1, false), Graph(2 * t)));
      out.push_back(join(matching_graph(t, true), Graph(2 * t + 1)));
      break;
    default:  // n = 4t + 3
      out.push_back(join(matching_graph(t + 1, false), Graph(2 * t + 1)));
      break;
  }
  return out;
}

std::vector<Graph> g3_extremal_classes(int n) {
  if (n == 6) return {join(complete_graph(3), Graph(3))};
  if (n == 7) {
    return {join(k3_plus_k1(), Graph(3)), join(complete_graph(3), Graph(4)),
            join(star_graph(4), Graph(3))};
  }
  if (n == 8) {
    return {join(k3_plus_k1(), Graph(4)), join(star_graph(4), Graph(4))};
  }
  // n >= 9: a star joined to an independent set, sides as equal as possible.
  int t = n / 2;
  if (n % 2 == 0) return {join(star_graph(t), Graph(t))};
  return {join(star_graph(t + 1), Graph(t))};
}

}  // namespace

double theta222_upper(int n) {
  require_order(n, 5, "theta222_upper");
  return n * (std::sqrt(8.0 * n - 7.0) + 1.0) / 4.0;
}

std::vector<Graph> girth8_obstruction_family() {
  return {cycle_graph(3), theta_graph(2, 2, 2), theta_graph(1, 3, 3),
          dumbbell_graph(4, 4, 0)};
}

double girth8_family_upper(int n) {
  require_order(n, 5, "girth8_family_upper");
  return n * (std::sqrt(24.0 * n - 23.0) - 1.0) / 8.0;
}

TuranResult ex_exact(TuranTarget target, int n) {
  TuranResult result;
  result.kind = TuranResult::Kind::exact;
  switch (target) {
    case TuranTarget::g1: {
      require_order(n, 5, "ex_exact(g1): the matching-join characterisation");
      long long value = (static_cast<long long>(n) * n + n) / 4;
      result.value = static_cast<double>(value);
      result.extremal_classes = g1_extremal_classes(n);
      return result;
    }
    case TuranTarget::g2: {
      require_order(n, 6, "ex_exact(g2): no value is established below 6");
      if (n == 6) {
        result.value = 11.0;
        result.extremal_classes = std::vector<Graph>{
            make_named(NamedKind::g_prime)};
        return result;
      }
      long long value = (static_cast<long long>(n) * n) / 4 + 1;
      result.value = static_cast<double>(value);
      // The extremal family is not characterised for n >= 7.
      result.extremal_classes = std::nullopt;
      return result;
    }
    case TuranTarget::g3: {
      require_order(n, 6, "ex_exact(g3): no value is established below 6");
      long long value;
      if (n == 6) {
        value = 12;
      } else if (n == 7) {
        value = 15;
      } else if (n == 8) {
        value = 19;
      } else {
        value = (static_cast<long long>(n) * n) / 4 + (n + 1) / 2 - 1;
      }
      result.value = static_cast<double>(value);
      result.extremal_classes = g3_extremal_classes(n);
      return result;
    }
  }
  throw Error("unknown extremal target");
}

long long induction_margin(const std::function<long long(long long)>& f,
                           long long n) {
  return (n - 1) * (f(n + 1) + 1) - (n + 1) * f(n);
}

InductionCase induction_case(const std::function<long long(long long)>& f,
                             long long n) {
  long long margin = induction_margin(f, n);
  if (margin > 0) return InductionCase::strict;
  if (margin == 0 || margin == -1) return InductionCase::zero_or_minus_one;
  return InductionCase::inapplicable;
}

TuranResult brute_force_ex(const TuranQuery& query, int ceiling) {
  if (query.family.empty()) {
    throw Error("brute_force_ex needs a non-empty forbidden family");
  }
  if (query.n < 3) {
    throw Error("brute_force_ex requires order >= 3, got " +
                std::to_string(query.n));
  }
  if (query.n > ceiling) {
    throw ResourceLimitError("brute_force_ex on " + std::to_string(query.n) +
                             " vertices exceeds the ceiling of " +
                             std::to_string(ceiling));
  }
  EnumConstraints constraints;
  constraints.forbidden_subgraphs = query.family;
  std::vector<Graph> free_graphs =
      enumerate_graphs(query.n, constraints, query.n);
  if (free_graphs.empty()) {
    throw Error("no family-free graph of this order exists");
  }
  // The enumeration covers every family-free graph of this order, so the
  // extremal value is simply the top occupied edge-count level.
  int best = -1;
  for (const Graph& g : free_graphs) best = std::max(best, g.size());
  TuranResult result;
  result.kind = TuranResult::Kind::exact;
  result.value = static_cast<double>(best);
  std::vector<Graph> classes;
  for (const Graph& g : free_graphs) {
    if (g.size() == best) classes.push_back(g);
  }
  result.extremal_classes = std::move(classes);
  return result;
}

}  // namespace trapset
