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

#include "trapset/ets.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "trapset/turan.hpp"

namespace trapset {
namespace {

long long pairs_of(int a) { return static_cast<long long>(a) * (a - 1) / 2; }

// Breadth-first distance between two vertices; -1 when unreachable.
int bfs_distance(const Graph& g, int from, int to) {
  if (from == to) return 0;
  std::array<int, Graph::kMaxVertices> dist{};
  dist.fill(-1);
  dist[from] = 0;
  std::array<int, Graph::kMaxVertices> queue{};
  int head = 0;
  int tail = 0;
  queue[tail++] = from;
  while (head < tail) {
    const int v = queue[head++];
    std::uint64_t rest = g.adjacency_mask(v);
    while (rest) {
      const int w = std::countr_zero(rest);
      rest &= rest - 1;
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      if (w == to) return dist[w];
      queue[tail++] = w;
    }
  }
  return -1;
}

}  // namespace

void EtsParams::validate() const {
  if (a < 1) throw Error("ETS parameters: a must be at least 1");
  if (b < 0) throw Error("ETS parameters: b must be non-negative");
  if (gamma < 2) throw Error("ETS parameters: gamma must be at least 2");
  if (tanner_girth != 6 && tanner_girth != 8) {
    throw Error("ETS parameters: tanner_girth must be 6 or 8");
  }
  const long long doubled = static_cast<long long>(a) * gamma - b;
  if (doubled < 0) {
    throw Error("ETS parameters: b exceeds a*gamma");
  }
  if (doubled % 2 != 0) {
    throw Error("ETS parameters: a*gamma - b must be even");
  }
}

int vn_edge_count(const EtsParams& params) {
  params.validate();
  return static_cast<int>(
      (static_cast<long long>(params.a) * params.gamma - params.b) / 2);
}

VnGraph make_vn_graph(Graph graph, EtsParams params) {
  const int edges = vn_edge_count(params);
  if (graph.order() != params.a) {
    throw Error("VN graph order does not match a");
  }
  if (graph.size() != edges) {
    throw Error("VN graph size does not match (a*gamma - b)/2");
  }
  if (graph.order() > 0 && graph.max_degree() > params.gamma) {
    throw Error("VN graph degree exceeds gamma");
  }
  if (params.tanner_girth == 8 && graph.girth() < 4) {
    throw Error("VN graph of a girth-8 code must be triangle-free");
  }
  return VnGraph{std::move(graph), params};
}

SystemMatrix::SystemMatrix(const Graph& vn_graph) : graph_(vn_graph) {
  const int n = graph_.order();
  pairs_.reserve(2 * static_cast<std::size_t>(graph_.size()));
  for (const auto& [u, v] : graph_.edges()) {
    pairs_.emplace_back(u, v);
    pairs_.emplace_back(v, u);
  }
  std::sort(pairs_.begin(), pairs_.end());
  pair_index_.assign(static_cast<std::size_t>(n) * std::max(n, 1), -1);
  for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) {
    pair_index_[static_cast<std::size_t>(pairs_[i].first) * n +
                pairs_[i].second] = i;
  }
}

int SystemMatrix::entry(int row, int col) const {
  if (row < 0 || row >= dim() || col < 0 || col >= dim()) {
    throw Error("system matrix index out of range");
  }
  const auto& [u, v] = pairs_[row];
  const auto& [x, y] = pairs_[col];
  return (y == u && x != v) ? 1 : 0;
}

std::vector<double> SystemMatrix::apply(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dim()) {
    throw Error("system matrix apply: dimension mismatch");
  }
  const int n = graph_.order();
  std::vector<double> incoming(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < dim(); ++i) {
    incoming[pairs_[i].second] += x[i];
  }
  std::vector<double> y(x.size(), 0.0);
  for (int i = 0; i < dim(); ++i) {
    const auto& [u, v] = pairs_[i];
    const int reverse = pair_index_[static_cast<std::size_t>(v) * n + u];
    y[i] = incoming[u] - x[reverse];
  }
  return y;
}

SystemMatrix build_system_matrix(const Graph& vn_graph) {
  if (vn_graph.size() < 1) {
    throw Error("system matrix requires a VN graph with at least one edge");
  }
  return SystemMatrix(vn_graph);
}

SystemMatrix build_system_matrix(const VnGraph& vn) {
  return build_system_matrix(vn.graph);
}

double spectral_radius(const SystemMatrix& m) {
  // A forest has a nilpotent system matrix: the radius is exactly zero.
  if (m.vn_graph().girth() == Graph::kInfiniteGirth) return 0.0;

  // Dominant-eigenvalue iteration on M + I. The shift keeps periodic
  // components (pure cycles) from oscillating; it is subtracted at the end.
  const int dim = m.dim();
  std::vector<double> x(static_cast<std::size_t>(dim), 1.0);
  double ratio_high = 0.0;
  double previous_high = std::numeric_limits<double>::infinity();
  int stable_iterations = 0;
  constexpr int kMaxIterations = 2'000'000;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    std::vector<double> y = m.apply(x);
    double high = 0.0;
    double low = std::numeric_limits<double>::infinity();
    double sup = 0.0;
    for (int i = 0; i < dim; ++i) {
      y[i] += x[i];
      const double ratio = y[i] / x[i];
      high = std::max(high, ratio);
      low = std::min(low, ratio);
      sup = std::max(sup, y[i]);
    }
    ratio_high = high;
    // The Perron value lies in [low, high] when the matrix is irreducible;
    // reducible cases (disconnected graphs, dangling trees) leave the gap
    // open, so a stability window on the upper bound serves as fallback.
    if (high - low <= 1e-10) return std::max(0.0, high - 1.0);
    if (std::abs(high - previous_high) <= 1e-13) {
      if (++stable_iterations >= 12) return std::max(0.0, high - 1.0);
    } else {
      stable_iterations = 0;
    }
    previous_high = high;
    for (int i = 0; i < dim; ++i) x[i] = y[i] / sup;
  }
  throw Error("spectral radius iteration did not converge; last estimate " +
              std::to_string(ratio_high - 1.0));
}

double spectral_radius_dense(const SystemMatrix& m) {
  const int dim = m.dim();
  Eigen::MatrixXd dense(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      dense(r, c) = static_cast<double>(m.entry(r, c));
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(dense, false);
  if (solver.info() != Eigen::Success) {
    throw Error("dense eigensolver failed on system matrix");
  }
  double radius = 0.0;
  for (int i = 0; i < dim; ++i) {
    radius = std::max(radius, std::abs(solver.eigenvalues()[i]));
  }
  return radius;
}

namespace {

// Integer form of the girth-8 admissibility test: b is admissible for size a
// iff  b >= a*gamma - a*(sqrt(24a-23)-1)/4, i.e. iff
// (4*(a*gamma-b) + a)^2 <= a^2*(24a-23). Both sides stay in 64-bit range for
// every input we accept.
bool girth8_b_admissible(long long a, long long b, long long gamma) {
  const long long lhs = 4 * (a * gamma - b) + a;
  if (lhs <= 0) return true;
  if (lhs > 3'000'000'000LL) return false;  // square would overflow; reject
  return lhs * lhs <= a * a * (24 * a - 23);
}

}  // namespace

int min_b_girth8(int a, int gamma) {
  if (a < 1) throw Error("min_b_girth8: a must be at least 1");
  if (gamma < 2) throw Error("min_b_girth8: gamma must be at least 2");
  if (a > 1'000'000 || gamma > 1'000'000) {
    throw Error("min_b_girth8: parameters out of supported range");
  }
  const long long product = static_cast<long long>(a) * gamma;
  // Admissibility is monotone in b, so start slightly below the closed-form
  // value and walk up; the integer test settles ties exactly.
  const double approx =
      product - a * (std::sqrt(24.0 * a - 23.0) - 1.0) / 4.0;
  long long b =
      std::max(0LL, static_cast<long long>(std::floor(approx)) - 8);
  if (b % 2 != product % 2) ++b;
  while (b <= product && !girth8_b_admissible(a, b, gamma)) b += 2;
  // b = a*gamma always passes: the left side reduces to a^2 <= a^2*(24a-23).
  return static_cast<int>(std::min(b, product));
}

std::optional<int> min_b_girth6(int a, int gamma, VnVariant variant) {
  if (a < 1) throw Error("min_b_girth6: a must be at least 1");
  if (gamma < 2) throw Error("min_b_girth6: gamma must be at least 2");
  const long long aa = a;
  long long doubled = 0;  // the inequality in the form 2b >= doubled
  switch (variant) {
    case VnVariant::t1_free:
      if (a < 5) return std::nullopt;
      doubled = 2 * aa * gamma - aa * aa - aa;
      break;
    case VnVariant::t2_free:
      if (a < 7) return std::nullopt;
      doubled = 2 * aa * gamma - aa * aa - 4;
      break;
    case VnVariant::t3_free:
      if (a < 6) return std::nullopt;
      doubled = 2 * aa * gamma - aa * aa - 2 * aa + 2;
      break;
  }
  long long b = doubled <= 0 ? 0 : (doubled + 1) / 2;
  if (b % 2 != (aa * gamma) % 2) ++b;
  if (b > std::numeric_limits<int>::max()) {
    throw Error("min_b_girth6: parameters out of supported range");
  }
  return static_cast<int>(b);
}

namespace {

// Erdos-Gallai: a non-increasing degree sequence is realizable by a simple
// graph iff the sum is even and every prefix satisfies the standard bound.
bool erdos_gallai(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  long long total = 0;
  for (int v : d) total += v;
  if (total % 2 != 0) return false;
  long long prefix = 0;
  for (int k = 1; k <= n; ++k) {
    prefix += d[k - 1];
    long long bound = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) bound += std::min(d[i], k);
    if (prefix > bound) return false;
  }
  return true;
}

// All non-increasing sequences over [2, max_degree] of length a summing to
// 2m, most regular first.
void degree_multisets(int a, int m, int max_degree,
                      std::vector<std::vector<int>>& out) {
  std::vector<int> current(static_cast<std::size_t>(a), 0);
  auto recurse = [&](auto&& self, int pos, int high, int remaining) -> void {
    if (pos == a) {
      if (remaining == 0 && erdos_gallai(current)) out.push_back(current);
      return;
    }
    const int slots_after = a - pos - 1;
    for (int d = std::min(high, remaining - 2 * slots_after); d >= 2; --d) {
      if (remaining - d > static_cast<long long>(d) * slots_after) break;
      current[static_cast<std::size_t>(pos)] = d;
      self(self, pos + 1, d, remaining - d);
    }
  };
  recurse(recurse, 0, max_degree, 2 * m);
}

// Exhaustive labelled search for one graph realizing a fixed target degree
// sequence under girth and forbidden-subgraph constraints. Neighbours of the
// smallest unfinished vertex are chosen in increasing order, so each labelled
// graph is visited at most once; untouched vertices of equal target degree
// are interchangeable and only the first is branched on.
class WitnessSearch {
 public:
  WitnessSearch(int a, int girth_at_least, const std::vector<Graph>& forbidden,
                long long budget)
      : a_(a),
        girth_(girth_at_least),
        forbidden_(forbidden),
        budget_(budget) {}

  std::optional<Graph> run(const std::vector<int>& targets) {
    target_ = targets;
    graph_ = Graph(a_);
    found_.reset();
    dfs(0, 1);
    return found_;
  }

  long long nodes_used() const { return nodes_; }

 private:
  bool dfs(int u, int from) {
    if (u == a_) {
      if (graph_.is_connected()) {
        found_ = graph_;
        return true;
      }
      return false;
    }
    if (graph_.degree(u) == target_[static_cast<std::size_t>(u)]) {
      // Once a vertex is saturated its component can only grow through
      // vertices that still accept edges; a saturated component that is not
      // the whole graph forces a disconnected result.
      if (component_saturated(u) && !graph_.is_connected()) return false;
      return dfs(u + 1, u + 2);
    }
    if (++nodes_ > budget_) {
      throw ResourceLimitError(
          "VN witness search exceeded its node budget (" +
          std::to_string(budget_) + " nodes)");
    }
    std::uint64_t classes_tried = 0;
    for (int v = from; v < a_; ++v) {
      const int tv = target_[static_cast<std::size_t>(v)];
      if (graph_.degree(v) >= tv) continue;
      if (graph_.has_edge(u, v)) continue;
      if (graph_.degree(v) == 0) {
        const std::uint64_t bit = 1ULL << tv;
        if (classes_tried & bit) continue;  // interchangeable with one tried
        classes_tried |= bit;
      }
      if (girth_ > 3) {
        const int dist = bfs_distance(graph_, u, v);
        if (dist >= 0 && dist + 1 < girth_) continue;
      }
      graph_.add_edge(u, v);
      bool viable = true;
      for (const Graph& pattern : forbidden_) {
        if (contains_subgraph_with_edge(graph_, pattern, u, v)) {
          viable = false;
          break;
        }
      }
      if (viable && degrees_completable()) {
        if (dfs(u, v + 1)) return true;
      }
      graph_.remove_edge(u, v);
    }
    return false;
  }

  // Every unsaturated vertex must still have enough non-adjacent unsaturated
  // partners to reach its target degree.
  bool degrees_completable() const {
    std::uint64_t open = 0;
    for (int v = 0; v < a_; ++v) {
      if (graph_.degree(v) < target_[static_cast<std::size_t>(v)]) {
        open |= 1ULL << v;
      }
    }
    std::uint64_t rest = open;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      const int partners = std::popcount(
          open & ~graph_.adjacency_mask(v) & ~(1ULL << v));
      if (partners < target_[static_cast<std::size_t>(v)] - graph_.degree(v)) {
        return false;
      }
    }
    return true;
  }

  bool component_saturated(int u) const {
    std::uint64_t component = 1ULL << u;
    std::uint64_t frontier = component;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t rest = frontier;
      while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        next |= graph_.adjacency_mask(v);
      }
      frontier = next & ~component;
      component |= next;
    }
    std::uint64_t rest = component;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (graph_.degree(v) < target_[static_cast<std::size_t>(v)]) {
        return false;
      }
    }
    return true;
  }

  int a_;
  int girth_;
  const std::vector<Graph>& forbidden_;
  long long budget_;
  long long nodes_ = 0;
  std::vector<int> target_;
  Graph graph_;
  std::optional<Graph> found_;
};

}  // namespace

std::optional<Graph> find_vn_witness(const VnSearchSpec& spec,
                                     long long node_budget) {
  if (spec.a < 0 || spec.a > Graph::kMaxVertices) {
    throw Error("find_vn_witness: vertex count out of range");
  }
  if (spec.girth_at_least < 3) {
    throw Error("find_vn_witness: girth_at_least must be at least 3");
  }
  // A connected leafless graph needs at least three vertices and at least as
  // many edges as vertices.
  if (spec.a < 3 || spec.m < spec.a) return std::nullopt;
  if (spec.m > pairs_of(spec.a)) return std::nullopt;
  if (spec.max_degree < 2) return std::nullopt;
  if (2LL * spec.m > static_cast<long long>(spec.a) * spec.max_degree) {
    return std::nullopt;
  }
  for (const Graph& pattern : spec.forbidden) {
    if (pattern.size() == 0 && pattern.order() <= spec.a) return std::nullopt;
  }

  std::vector<std::vector<int>> sequences;
  degree_multisets(spec.a, spec.m, std::min(spec.max_degree, spec.a - 1),
                   sequences);
  WitnessSearch search(spec.a, spec.girth_at_least, spec.forbidden,
                       node_budget);
  for (const auto& targets : sequences) {
    if (auto witness = search.run(targets)) return witness;
  }
  return std::nullopt;
}

namespace {

VnVariant variant_of(EtsRegime regime) {
  switch (regime) {
    case EtsRegime::girth6_t1_free: return VnVariant::t1_free;
    case EtsRegime::girth6_t2_free: return VnVariant::t2_free;
    case EtsRegime::girth6_t3_free: return VnVariant::t3_free;
    default: throw Error("regime has no girth-6 variant");
  }
}

TuranTarget turan_target_of(EtsRegime regime) {
  switch (regime) {
    case EtsRegime::girth6_t1_free: return TuranTarget::g1;
    case EtsRegime::girth6_t2_free: return TuranTarget::g2;
    case EtsRegime::girth6_t3_free: return TuranTarget::g3;
    default: throw Error("regime has no chorded-cycle pattern");
  }
}

std::vector<Graph> forbidden_of(EtsRegime regime) {
  switch (regime) {
    case EtsRegime::girth8_no_shared_8cycles:
      // Two 8-cycles sharing a variable node appear in the VN graph as two
      // 4-cycles sharing an edge, a path, or a vertex. Triangles are ruled
      // out separately through the girth constraint.
      return {theta_graph(2, 2, 2), theta_graph(1, 3, 3),
              dumbbell_graph(4, 4, 0)};
    case EtsRegime::girth6_t1_free: return {make_named(NamedKind::g1)};
    case EtsRegime::girth6_t2_free: return {make_named(NamedKind::g2)};
    case EtsRegime::girth6_t3_free: return {make_named(NamedKind::g3)};
  }
  throw Error("unknown ETS regime");
}

// Exact extremal edge counts are only available from the minimum order the
// characterizations cover.
int turan_cap_minimum_order(TuranTarget target) {
  return target == TuranTarget::g1 ? 5 : 6;
}

}  // namespace

MinEtsSize min_ets_size(int gamma, int b, EtsRegime regime,
                        bool confirm_existence, const EtsSearchLimits& limits) {
  if (gamma < 2) throw Error("min_ets_size: gamma must be at least 2");
  if (b < 0) throw Error("min_ets_size: b must be non-negative");
  const bool girth8 = regime == EtsRegime::girth8_no_shared_8cycles;

  const auto edge_count = [&](int a) -> std::optional<long long> {
    const long long doubled = static_cast<long long>(a) * gamma - b;
    if (doubled < 0 || doubled % 2 != 0) return std::nullopt;
    return doubled / 2;
  };

  // Caps that hold unconditionally: the simple-graph bound, the
  // triangle-free bound for girth-8 codes, and the exact extremal numbers of
  // the chorded-cycle patterns where the characterizations apply.
  const auto within_caps = [&](int a, long long m) {
    if (m > pairs_of(a)) return false;
    if (girth8) {
      if (m > static_cast<long long>(a) * a / 4) return false;
      if (a >= 5 &&
          m > static_cast<long long>(std::floor(girth8_family_upper(a)))) {
        return false;
      }
    } else {
      const TuranTarget target = turan_target_of(regime);
      if (a >= turan_cap_minimum_order(target) &&
          m > static_cast<long long>(ex_exact(target, a).value)) {
        return false;
      }
    }
    return true;
  };

  const int start = std::max(b, 1);
  constexpr int kScanLimit = 4096;

  MinEtsSize result;
  result.a_lower = -1;
  for (int a = start; a < start + kScanLimit; ++a) {
    const auto m = edge_count(a);
    if (!m) continue;
    if (!within_caps(a, *m)) continue;
    if (girth8) {
      if (b < min_b_girth8(a, gamma)) continue;
    } else {
      const auto needed = min_b_girth6(a, gamma, variant_of(regime));
      if (needed && b < *needed) continue;
    }
    result.a_lower = a;
    break;
  }
  if (result.a_lower < 0) {
    throw Error("min_ets_size: no admissible size below the scan limit");
  }

  if (!confirm_existence) return result;

  // The closed-form bounds are not reliable for small a, so the existence
  // scan screens with parity and edge caps only and otherwise searches.
  const std::vector<Graph> forbidden = forbidden_of(regime);
  for (int a = start; a <= limits.max_a; ++a) {
    const auto m = edge_count(a);
    if (!m) continue;
    if (!within_caps(a, *m)) continue;
    VnSearchSpec spec;
    spec.a = a;
    spec.m = static_cast<int>(*m);
    spec.max_degree = gamma;
    spec.girth_at_least = girth8 ? 4 : 3;
    spec.forbidden = forbidden;
    if (find_vn_witness(spec, limits.node_budget)) {
      result.a_confirmed = a;
      break;
    }
  }
  return result;
}

VnClassification classify_vn(const Graph& vn_graph) {
  static const Graph kTheta222 = theta_graph(2, 2, 2);
  static const Graph kTheta133 = theta_graph(1, 3, 3);
  static const Graph kDumbbell440 = dumbbell_graph(4, 4, 0);
  static const std::array<Graph, 3> kChordPatterns = {
      make_named(NamedKind::g1), make_named(NamedKind::g2),
      make_named(NamedKind::g3)};

  VnClassification out;
  if (contains_subgraph(vn_graph, kTheta222) ||
      contains_subgraph(vn_graph, kTheta133) ||
      contains_subgraph(vn_graph, kDumbbell440)) {
    out.c4 = C4Class::interacting;
  }
  for (int i = 0; i < 3; ++i) {
    out.chord[static_cast<std::size_t>(i)] =
        contains_subgraph(vn_graph, kChordPatterns[static_cast<std::size_t>(i)])
            ? ChordClass::pattern_containing
            : ChordClass::pattern_free;
  }
  return out;
}

}  // namespace trapset
