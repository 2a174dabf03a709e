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
 * @file graph.hpp
 * Dense small-graph type with the operations the rest of the library is
 * built on: named-graph constructors, join/union/complement, girth and
 * distance queries, subgraph-monomorphism search, and a canonical form
 * giving exact isomorphism tests.
 */

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trapset {

/** Base class for all errors raised by the library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/** Raised when a configured resource ceiling would be exceeded. */
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& message) : Error(message) {}
};

/**
 * Simple undirected graph on at most 64 vertices, stored as one adjacency
 * bitmask per vertex. Vertices are 0-based. Loops and parallel edges are
 * rejected.
 */
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  /** Sentinel returned by girth() for acyclic graphs. */
  static constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /** Bitmask of neighbours of v (bit u set iff uv is an edge). */
  std::uint64_t adjacency_mask(int v) const { return adj_[v]; }

  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;

  /** Degree sequence in non-increasing order. */
  std::vector<int> degree_sequence() const;

  /** Edge list (u < v), lexicographically ordered. */
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> neighbors(int v) const;

  bool is_connected() const;
  int component_count() const;
  bool is_bipartite() const;

  /** Length of a shortest cycle, or kInfiniteGirth if the graph is a forest. */
  int girth() const;

  /** Longest shortest-path distance. Throws Error if disconnected. */
  int diameter() const;

  /**
   * Pair-distance histogram: entry d holds the number of unordered vertex
   * pairs at distance d. Entries for d >= 1 sum to n(n-1)/2. Throws Error
   * if the graph is disconnected.
   */
  std::vector<std::int64_t> distance_profile() const;

  /**
   * Parse the plain text form: optional '#' comment lines, then a line
   * "n m", then m lines "u v" with 0-based endpoints.
   */
  static Graph from_text(const std::string& text);
  std::string to_text() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

/** Graph kinds accepted by make_named(). */
enum class NamedKind {
  path,                // p1 = number of vertices
  cycle,               // p1 = number of vertices (>= 3)
  complete,            // p1 = number of vertices
  complete_bipartite,  // p1, p2 = side sizes
  star,                // p1 = number of vertices (centre plus p1-1 leaves)
  theta,               // p1 <= p2 <= p3 = path lengths between two hubs
  dumbbell,            // p1, p2 = cycle lengths, p3 = connecting path length
  g1,                  // 5-cycle with two chords from one vertex
  g2,                  // 6-cycle with chords (0,2) and (0,4)
  g3,                  // 6-cycle with chords (0,2) and (3,5)
  k33,                 // complete bipartite 3+3
  h3,                  // triangular prism (the non-bipartite cubic 6-vertex graph)
  g_prime,             // K5 with one pendant vertex
  t_pattern_vn,        // p1 = 1..3: VN-graph image of the Tanner pattern Ti
};

/**
 * Construct a graph by name. Parameter meaning depends on the kind (see
 * NamedKind). Throws Error on invalid parameters, e.g. theta(1,1,c) which
 * would need a parallel edge.
 */
Graph make_named(NamedKind kind, int p1 = 0, int p2 = 0, int p3 = 0);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int left, int right);
Graph star_graph(int n);
Graph theta_graph(int a, int b, int c);
Graph dumbbell_graph(int a, int b, int q);

/** Join: disjoint union plus all edges between the two parts. */
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/** Remove vertex v together with all incident edges; higher ids shift down. */
Graph delete_vertex(const Graph& g, int v);

/** True iff host has a (not necessarily induced) subgraph isomorphic to pattern. */
bool contains_subgraph(const Graph& host, const Graph& pattern);

/**
 * Witness form of contains_subgraph: entry i is the host vertex that pattern
 * vertex i maps to, or std::nullopt when no embedding exists.
 */
std::optional<std::vector<int>> find_subgraph(const Graph& host,
                                              const Graph& pattern);

/**
 * True iff some embedding of pattern into host uses the host edge {u, v}.
 * Used to test forbidden subgraphs incrementally while adding edges: a
 * previously pattern-free graph can only gain an embedding through the new
 * edge.
 */
bool contains_subgraph_with_edge(const Graph& host, const Graph& pattern,
                                 int u, int v);

/**
 * Canonical byte string: equal for two graphs iff they are isomorphic.
 * Stable across runs and platforms.
 */
std::string canonical_form(const Graph& g);

/** Vertex -> canonical index map realising canonical_form. */
std::vector<int> canonical_labeling(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace trapset
