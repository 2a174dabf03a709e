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

#include "trapset/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

namespace trapset {

namespace {

// Distance between u and v, or -1 when they lie in different components.
int bfs_distance(const Graph& g, int u, int v) {
  if (u == v) return 0;
  std::vector<int> dist(g.order(), -1);
  std::vector<int> queue(g.order());
  dist[u] = 0;
  queue[0] = u;
  int head = 0, tail = 1;
  while (head < tail) {
    int x = queue[head++];
    for (int y : g.neighbors(x)) {
      if (dist[y] != -1) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue[tail++] = y;
    }
  }
  return -1;
}

// Every graph that can still grow into a valid result must pass these; they
// only use constraints preserved by adding edges, so pruning here cannot
// lose any final graph.
struct GrowthChecks {
  const EnumConstraints& c;
  int n;
  int target;  // -1 when edge_count is unset

  // Accept g + (u, v) purely from local information; g itself already passed.
  bool edge_ok(const Graph& g, int u, int v) const {
    if (c.max_degree &&
        (g.degree(u) + 1 > *c.max_degree || g.degree(v) + 1 > *c.max_degree)) {
      return false;
    }
    if (c.girth_at_least) {
      int d = bfs_distance(g, u, v);
      if (d != -1 && d + 1 < *c.girth_at_least) return false;
    }
    return true;
  }

  // Checks on the grown graph h that require the new edge to be present.
  bool grown_ok(const Graph& h, int u, int v) const {
    for (const Graph& pattern : c.forbidden_subgraphs) {
      if (pattern.size() == 0) continue;  // handled before the search starts
      if (contains_subgraph_with_edge(h, pattern, u, v)) return false;
    }
    if (target >= 0) {
      int remaining = target - h.size();
      if (c.min_degree && *c.min_degree > 0) {
        int deficit = 0;
        for (int w = 0; w < n; ++w) {
          deficit += std::max(0, *c.min_degree - h.degree(w));
        }
        if (deficit > 2 * remaining) return false;
      }
      if (c.max_degree) {
        int slack = 0;
        for (int w = 0; w < n; ++w) slack += *c.max_degree - h.degree(w);
        if (slack < 2 * remaining) return false;
      }
      if (c.connected && h.component_count() - 1 > remaining) return false;
    }
    return true;
  }
};

bool final_ok(const Graph& g, const EnumConstraints& c) {
  if (c.edge_count && g.size() != *c.edge_count) return false;
  if (c.min_degree && g.order() > 0 && g.min_degree() < *c.min_degree) {
    return false;
  }
  if (c.connected && !g.is_connected()) return false;
  return true;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const EnumConstraints& constraints,
                                    int ceiling) {
  if (n < 0) throw Error("cannot enumerate graphs on a negative vertex count");
  if (n > Graph::kMaxVertices) {
    throw Error("graph order out of range: " + std::to_string(n));
  }
  if (n > ceiling) {
    throw ResourceLimitError("enumeration on " + std::to_string(n) +
                             " vertices exceeds the ceiling of " +
                             std::to_string(ceiling));
  }
  if (constraints.edge_count && *constraints.edge_count < 0) {
    throw Error("edge_count must be non-negative");
  }
  if (constraints.max_degree && *constraints.max_degree < 0) {
    throw Error("max_degree must be non-negative");
  }

  // A forbidden subgraph without edges is present in every graph with at
  // least that many vertices, so the answer is empty outright.
  for (const Graph& pattern : constraints.forbidden_subgraphs) {
    if (pattern.size() == 0 && pattern.order() <= n) return {};
  }

  const int max_edges = n * (n - 1) / 2;
  const int target = constraints.edge_count.value_or(-1);
  if (target > max_edges) return {};

  GrowthChecks checks{constraints, n, target};
  std::vector<std::pair<std::string, Graph>> results;
  std::vector<Graph> current{Graph(n)};
  if (final_ok(current.front(), constraints)) {
    results.emplace_back(canonical_form(current.front()), current.front());
  }

  for (int m = 0; m < (target >= 0 ? target : max_edges); ++m) {
    std::unordered_set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& g : current) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          if (!checks.edge_ok(g, u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          if (!checks.grown_ok(h, u, v)) continue;
          std::string form = canonical_form(h);
          if (!seen.insert(std::move(form)).second) continue;
          next.push_back(std::move(h));
        }
      }
    }
    current = std::move(next);
    if (current.empty()) break;
    for (const Graph& g : current) {
      if (final_ok(g, constraints)) {
        results.emplace_back(canonical_form(g), g);
      }
    }
  }

  std::sort(results.begin(), results.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(results.size());
  for (auto& entry : results) out.push_back(std::move(entry.second));
  return out;
}

}  // namespace trapset
