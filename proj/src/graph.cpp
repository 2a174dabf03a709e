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

#include "trapset/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

namespace trapset {

namespace {

int popcount64(std::uint64_t x) { return std::popcount(x); }

}  // namespace

Graph::Graph(int n) : n_(n), m_(0) {
  if (n < 0 || n > kMaxVertices) {
    throw Error("graph order out of range: " + std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw Error("vertex out of range: " + std::to_string(v));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw Error("loops are not supported");
  }
  if ((adj_[u] >> v) & 1) {
    throw Error("duplicate edge " + std::to_string(u) + "-" +
                std::to_string(v));
  }
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) {
    throw Error("no such edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
  --m_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return popcount64(adj_[v]);
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, popcount64(adj_[v]));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, popcount64(adj_[v]));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degs(n_);
  for (int v = 0; v < n_; ++v) degs[v] = popcount64(adj_[v]);
  std::sort(degs.rbegin(), degs.rend());
  return degs;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    // Keep only neighbours above u; a plain shift by u + 1 would be
    // undefined when u is the last representable vertex (shift count 64).
    std::uint64_t higher =
        u + 1 >= 64 ? 0 : adj_[u] >> (u + 1) << (u + 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  std::uint64_t mask = adj_[v];
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

bool Graph::is_connected() const { return component_count() <= 1; }

int Graph::component_count() const {
  if (n_ == 0) return 0;
  std::uint64_t seen = 0;
  const std::uint64_t all =
      n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  int components = 0;
  while (seen != all) {
    int start = std::countr_zero(~seen & all);
    ++components;
    std::uint64_t frontier = std::uint64_t{1} << start;
    while (frontier) {
      seen |= frontier;
      std::uint64_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= adj_[v];
      }
      frontier = next & ~seen;
    }
  }
  return components;
}

bool Graph::is_bipartite() const {
  std::vector<int> side(n_, -1);
  std::vector<int> queue;
  for (int s = 0; s < n_; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    std::size_t head = 0;
    while (head < queue.size()) {
      int x = queue[head++];
      for (int y : neighbors(x)) {
        if (side[y] == -1) {
          side[y] = side[x] ^ 1;
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

int Graph::girth() const {
  int best = kInfiniteGirth;
  std::vector<int> dist(n_), parent(n_), queue(n_);
  for (int s = 0; s < n_; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue[0] = s;
    int head = 0, tail = 1;
    while (head < tail) {
      int x = queue[head++];
      if (best != kInfiniteGirth && 2 * dist[x] >= best) break;
      for (int y : neighbors(x)) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue[tail++] = y;
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

int Graph::diameter() const {
  auto profile = distance_profile();
  return static_cast<int>(profile.size()) - 1;
}

std::vector<std::int64_t> Graph::distance_profile() const {
  if (n_ == 0) {
    throw Error("distance profile of the empty graph is undefined");
  }
  std::vector<std::int64_t> profile(1, 0);
  std::vector<int> dist(n_), queue(n_);
  for (int s = 0; s < n_; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue[0] = s;
    int head = 0, tail = 1;
    while (head < tail) {
      int x = queue[head++];
      for (int y : neighbors(x)) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          queue[tail++] = y;
        }
      }
    }
    if (tail != n_) {
      throw Error("distance profile requires a connected graph");
    }
    for (int v = s + 1; v < n_; ++v) {
      int d = dist[v];
      if (static_cast<std::size_t>(d) >= profile.size()) {
        profile.resize(static_cast<std::size_t>(d) + 1, 0);
      }
      ++profile[static_cast<std::size_t>(d)];
    }
  }
  return profile;
}

Graph Graph::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> tokens;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
  }
  if (tokens.size() < 2) {
    throw Error("graph text must start with \"n m\"");
  }
  int n = 0, m = 0;
  try {
    n = std::stoi(tokens[0]);
    m = std::stoi(tokens[1]);
  } catch (const std::exception&) {
    throw Error("malformed graph header: " + tokens[0] + " " + tokens[1]);
  }
  if (m < 0 || tokens.size() != static_cast<std::size_t>(2 + 2 * m)) {
    throw Error("graph text announces " + std::to_string(m) +
                " edges but carries " +
                std::to_string((tokens.size() - 2) / 2));
  }
  Graph g(n);
  for (int e = 0; e < m; ++e) {
    int u = 0, v = 0;
    try {
      u = std::stoi(tokens[2 + 2 * e]);
      v = std::stoi(tokens[3 + 2 * e]);
    } catch (const std::exception&) {
      throw Error("malformed edge line in graph text");
    }
    g.add_edge(u, v);
  }
  return g;
}

std::string Graph::to_text() const {
  std::ostringstream out;
  out << n_ << " " << m_ << "\n";
  for (auto [u, v] : edges()) out << u << " " << v << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Named graphs
// ---------------------------------------------------------------------------

Graph path_graph(int n) {
  if (n < 1) throw Error("path graph needs at least 1 vertex");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error("cycle graph needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw Error("complete graph needs at least 1 vertex");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite_graph(int left, int right) {
  if (left < 1 || right < 1) {
    throw Error("complete bipartite graph needs non-empty sides");
  }
  Graph g(left + right);
  for (int u = 0; u < left; ++u)
    for (int v = 0; v < right; ++v) g.add_edge(u, left + v);
  return g;
}

Graph star_graph(int n) {
  if (n < 1) throw Error("star graph needs at least 1 vertex");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph theta_graph(int a, int b, int c) {
  if (!(1 <= a && a <= b && b <= c)) {
    throw Error("theta graph needs path lengths 1 <= a <= b <= c");
  }
  if (b == 1) {
    throw Error("theta graph with two length-1 paths would need a parallel edge");
  }
  Graph g(a + b + c - 1);
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

Graph dumbbell_graph(int a, int b, int q) {
  if (a < 3 || b < 3 || q < 0) {
    throw Error("dumbbell graph needs cycle lengths >= 3 and path length >= 0");
  }
  Graph g(a + b + q - 1);
  for (int v = 0; v < a; ++v) g.add_edge(v, (v + 1) % a);
  // Walk a path of q edges from vertex 0, then close the second cycle at its
  // far end (q = 0 shares vertex 0 itself).
  int anchor = 0;
  int next = a;
  for (int i = 0; i < q; ++i) {
    g.add_edge(anchor, next);
    anchor = next++;
  }
  int prev = anchor;
  for (int i = 1; i < b; ++i) {
    g.add_edge(prev, next);
    prev = next++;
  }
  g.add_edge(prev, anchor);
  return g;
}

namespace {

Graph pattern_g1() {
  Graph g = cycle_graph(5);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  return g;
}

Graph pattern_g2() {
  Graph g = cycle_graph(6);
  g.add_edge(0, 2);
  g.add_edge(0, 4);
  return g;
}

Graph pattern_g3() {
  Graph g = cycle_graph(6);
  g.add_edge(0, 2);
  g.add_edge(3, 5);
  return g;
}

Graph graph_h3() {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(3, 5);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  return g;
}

Graph graph_g_prime() {
  Graph g = complete_graph(5);
  Graph p(1);
  g = disjoint_union(g, p);
  g.add_edge(0, 5);
  return g;
}

}  // namespace

Graph make_named(NamedKind kind, int p1, int p2, int p3) {
  switch (kind) {
    case NamedKind::path:
      return path_graph(p1);
    case NamedKind::cycle:
      return cycle_graph(p1);
    case NamedKind::complete:
      return complete_graph(p1);
    case NamedKind::complete_bipartite:
      return complete_bipartite_graph(p1, p2);
    case NamedKind::star:
      return star_graph(p1);
    case NamedKind::theta:
      return theta_graph(p1, p2, p3);
    case NamedKind::dumbbell:
      return dumbbell_graph(p1, p2, p3);
    case NamedKind::g1:
      return pattern_g1();
    case NamedKind::g2:
      return pattern_g2();
    case NamedKind::g3:
      return pattern_g3();
    case NamedKind::k33:
      return complete_bipartite_graph(3, 3);
    case NamedKind::h3:
      return graph_h3();
    case NamedKind::g_prime:
      return graph_g_prime();
    case NamedKind::t_pattern_vn:
      if (p1 < 1 || p1 > 3) {
        throw Error("t_pattern_vn index must be 1, 2 or 3");
      }
      return p1 == 1 ? pattern_g1() : p1 == 2 ? pattern_g2() : pattern_g3();
  }
  throw Error("unknown named graph kind");
}

// ---------------------------------------------------------------------------
// Graph operations
// ---------------------------------------------------------------------------

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw Error("vertex out of range: " + std::to_string(v));
  }
  Graph out(g.order() - 1);
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    out.add_edge(a - (a > v ? 1 : 0), b - (b > v ? 1 : 0));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subgraph monomorphism
// ---------------------------------------------------------------------------

namespace {

// Order the pattern vertices so each one (after any pre-assigned seeds) has
// as many already-placed neighbours as possible; this keeps the candidate
// sets small during backtracking.
std::vector<int> pattern_order(const Graph& pattern,
                               const std::vector<int>& seeds) {
  int k = pattern.order();
  std::vector<bool> placed(k, false);
  std::vector<int> order;
  order.reserve(k);
  for (int s : seeds) {
    order.push_back(s);
    placed[s] = true;
  }
  while (static_cast<int>(order.size()) < k) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int p = 0; p < k; ++p) {
      if (placed[p]) continue;
      int links = 0;
      for (int q : pattern.neighbors(p))
        if (placed[q]) ++links;
      int deg = pattern.degree(p);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = p;
        best_links = links;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed[best] = true;
  }
  return order;
}

struct EmbedSearch {
  const Graph& host;
  const Graph& pattern;
  const std::vector<int>& order;
  std::vector<int>& image;  // pattern vertex -> host vertex (-1 unset)
  std::uint64_t used;

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    int p = order[depth];
    std::uint64_t candidates;
    bool constrained = false;
    for (int q : pattern.neighbors(p)) {
      if (image[q] < 0) continue;
      std::uint64_t mask = host.adjacency_mask(image[q]);
      candidates = constrained ? (candidates & mask) : mask;
      constrained = true;
    }
    if (!constrained) {
      int n = host.order();
      candidates = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }
    candidates &= ~used;
    int want = pattern.degree(p);
    while (candidates) {
      int h = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (host.degree(h) < want) continue;
      image[p] = h;
      used |= std::uint64_t{1} << h;
      if (run(depth + 1)) return true;
      image[p] = -1;
      used &= ~(std::uint64_t{1} << h);
    }
    return false;
  }
};

bool embed(const Graph& host, const Graph& pattern,
           const std::vector<std::pair<int, int>>& seeds,
           std::vector<int>* witness) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) {
    return false;
  }
  std::vector<int> image(pattern.order(), -1);
  std::uint64_t used = 0;
  std::vector<int> seed_vertices;
  for (auto [p, h] : seeds) {
    if (host.degree(h) < pattern.degree(p)) return false;
    if ((used >> h) & 1) return false;
    image[p] = h;
    used |= std::uint64_t{1} << h;
    seed_vertices.push_back(p);
  }
  // Seeded assignments must already respect pattern adjacency.
  for (std::size_t i = 0; i < seed_vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < seed_vertices.size(); ++j) {
      int p = seed_vertices[i], q = seed_vertices[j];
      if (pattern.has_edge(p, q) && !host.has_edge(image[p], image[q])) {
        return false;
      }
    }
  }
  std::vector<int> order = pattern_order(pattern, seed_vertices);
  EmbedSearch search{host, pattern, order, image, used};
  if (!search.run(seed_vertices.size())) return false;
  if (witness) *witness = image;
  return true;
}

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  return embed(host, pattern, {}, nullptr);
}

std::optional<std::vector<int>> find_subgraph(const Graph& host,
                                              const Graph& pattern) {
  std::vector<int> witness;
  if (embed(host, pattern, {}, &witness)) return witness;
  return std::nullopt;
}

bool contains_subgraph_with_edge(const Graph& host, const Graph& pattern,
                                 int u, int v) {
  if (!host.has_edge(u, v)) {
    throw Error("anchor edge is not present in the host graph");
  }
  for (auto [x, y] : pattern.edges()) {
    if (embed(host, pattern, {{x, u}, {y, v}}, nullptr)) return true;
    if (embed(host, pattern, {{x, v}, {y, u}}, nullptr)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

namespace {

// Equitable refinement: repeatedly split colour classes by the multiset of
// neighbour colours until stable. Colours are renumbered 0..k-1 in the
// lexicographic order of their signatures, which keeps the result canonical
// for the search below.
void refine_colors(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  std::vector<std::vector<int>> sig(n);
  std::vector<int> idx(n);
  for (;;) {
    for (int v = 0; v < n; ++v) {
      sig[v].clear();
      sig[v].push_back(color[v]);
      for (int u : g.neighbors(v)) sig[v].push_back(color[u]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    for (int v = 0; v < n; ++v) idx[v] = v;
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    bool changed = false;
    int next_color = -1;
    std::vector<int> new_color(n);
    for (int i = 0; i < n; ++i) {
      if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) ++next_color;
      new_color[idx[i]] = next_color;
    }
    for (int v = 0; v < n; ++v) {
      if (new_color[v] != color[v]) changed = true;
    }
    color.swap(new_color);
    if (!changed) break;
  }
}

std::string encode_with_labels(const Graph& g, const std::vector<int>& label) {
  const int n = g.order();
  std::vector<int> inverse(n);
  for (int v = 0; v < n; ++v) inverse[label[v]] = v;
  std::string bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
  std::size_t t = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(inverse[i], inverse[j])) {
        bits[t / 8] = static_cast<char>(bits[t / 8] | (1 << (t % 8)));
      }
      ++t;
    }
  }
  return bits;
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::string best;
  std::vector<int> best_label;
  bool have_best = false;
  std::vector<std::vector<int>> generators;
  std::vector<int> prefix;
  long nodes = 0;

  static constexpr long kNodeBudget = 20'000'000;
  static constexpr std::size_t kMaxGenerators = 256;

  void run() {
    std::vector<int> color(n, 0);
    recurse(std::move(color));
  }

  bool fixes_prefix(const std::vector<int>& perm) const {
    for (int v : prefix) {
      if (perm[v] != v) return false;
    }
    return true;
  }

  int orbit_find(std::vector<int>& root, int v) const {
    while (root[v] != v) {
      root[v] = root[root[v]];
      v = root[v];
    }
    return v;
  }

  void recurse(std::vector<int> color) {
    if (++nodes > kNodeBudget) {
      throw Error("canonical form: search budget exceeded");
    }
    refine_colors(g, color);
    int cell_color = -1, cell_size = 0;
    {
      std::vector<int> count(n, 0);
      for (int v = 0; v < n; ++v) ++count[color[v]];
      for (int c = 0; c < n; ++c) {
        if (count[c] > 1) {
          cell_color = c;
          cell_size = count[c];
          break;
        }
      }
      // Prefer the first (lowest-colour) smallest non-singleton cell.
      for (int c = 0; c < n; ++c) {
        if (count[c] > 1 && count[c] < cell_size) {
          cell_color = c;
          cell_size = count[c];
        }
      }
    }
    if (cell_color == -1) {
      std::string code = encode_with_labels(g, color);
      if (!have_best || code < best) {
        best = std::move(code);
        best_label = color;
        have_best = true;
      } else if (code == best) {
        std::vector<int> inverse_best(n);
        for (int v = 0; v < n; ++v) inverse_best[best_label[v]] = v;
        std::vector<int> sigma(n);
        bool identity = true;
        for (int v = 0; v < n; ++v) {
          sigma[v] = inverse_best[color[v]];
          if (sigma[v] != v) identity = false;
        }
        if (!identity && generators.size() < kMaxGenerators) {
          generators.push_back(std::move(sigma));
        }
      }
      return;
    }
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v) {
      if (color[v] == cell_color) candidates.push_back(v);
    }
    std::vector<int> processed;
    for (int v : candidates) {
      // Skip candidates equivalent (under automorphisms fixing the current
      // prefix) to one we already explored.
      bool skip = false;
      if (!processed.empty() && !generators.empty()) {
        std::vector<int> root(n);
        for (int i = 0; i < n; ++i) root[i] = i;
        for (const auto& perm : generators) {
          if (!fixes_prefix(perm)) continue;
          for (int x = 0; x < n; ++x) {
            int a = orbit_find(root, x), b = orbit_find(root, perm[x]);
            if (a != b) root[a] = b;
          }
        }
        int rv = orbit_find(root, v);
        for (int p : processed) {
          if (orbit_find(root, p) == rv) {
            skip = true;
            break;
          }
        }
      }
      if (skip) continue;
      processed.push_back(v);
      std::vector<int> branched(color.size());
      for (int u = 0; u < n; ++u) {
        branched[u] = color[u] * 2 + (u == v ? 0 : 1);
      }
      prefix.push_back(v);
      recurse(std::move(branched));
      prefix.pop_back();
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  CanonSearch search{g, g.order()};
  search.run();
  return search.best_label;
}

std::string canonical_form(const Graph& g) {
  std::string header;
  header.push_back(static_cast<char>(g.order()));
  if (g.order() == 0) return header;
  CanonSearch search{g, g.order()};
  search.run();
  return header + search.best;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace trapset
