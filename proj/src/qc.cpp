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

#include "trapset/qc.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "trapset/ets.hpp"

namespace trapset {

namespace {

int positive_mod(long long x, int p) {
  long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

}  // namespace

bool ExponentMatrix::fully_connected() const {
  for (const auto& row : shifts) {
    for (int s : row) {
      if (s == kNoShift) {
        return false;
      }
    }
  }
  return true;
}

void ExponentMatrix::validate() const {
  if (block_rows < 1 || block_cols < 1) {
    throw Error("exponent matrix needs at least one block row and column");
  }
  if (lifting < 2) {
    throw Error("lifting degree must be at least 2, got " +
                std::to_string(lifting));
  }
  if (static_cast<int>(shifts.size()) != block_rows) {
    throw Error("exponent matrix has " + std::to_string(shifts.size()) +
                " rows, expected " + std::to_string(block_rows));
  }
  for (const auto& row : shifts) {
    if (static_cast<int>(row.size()) != block_cols) {
      throw Error("exponent matrix row has " + std::to_string(row.size()) +
                  " entries, expected " + std::to_string(block_cols));
    }
    for (int s : row) {
      if (s != kNoShift && (s < 0 || s >= lifting)) {
        throw Error("shift " + std::to_string(s) + " out of range for p = " +
                    std::to_string(lifting));
      }
    }
  }
}

ExponentMatrix parse_exponent_matrix(const std::string& text) {
  std::istringstream in(text);
  ExponentMatrix e;
  if (!(in >> e.block_rows >> e.block_cols >> e.lifting)) {
    throw Error("exponent matrix header must read \"gamma eta p\"");
  }
  if (e.block_rows < 1 || e.block_cols < 1 || e.block_rows > 64 ||
      e.block_cols > 4096) {
    throw Error("implausible exponent matrix dimensions " +
                std::to_string(e.block_rows) + " x " +
                std::to_string(e.block_cols));
  }
  e.shifts.assign(e.block_rows, std::vector<int>(e.block_cols, kNoShift));
  for (int i = 0; i < e.block_rows; ++i) {
    for (int j = 0; j < e.block_cols; ++j) {
      std::string token;
      if (!(in >> token)) {
        throw Error("exponent matrix ended early at block (" +
                    std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      if (token == "inf") {
        e.shifts[i][j] = kNoShift;
        continue;
      }
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || value < 0) {
        throw Error("bad exponent entry \"" + token + "\"");
      }
      e.shifts[i][j] = value;
    }
  }
  std::string trailing;
  if (in >> trailing) {
    throw Error("unexpected trailing token \"" + trailing + "\"");
  }
  e.validate();
  return e;
}

std::string format_exponent_matrix(const ExponentMatrix& e) {
  e.validate();
  std::ostringstream out;
  out << e.block_rows << ' ' << e.block_cols << ' ' << e.lifting << '\n';
  for (const auto& row : e.shifts) {
    for (int j = 0; j < e.block_cols; ++j) {
      if (j > 0) {
        out << ' ';
      }
      if (row[j] == kNoShift) {
        out << "inf";
      } else {
        out << row[j];
      }
    }
    out << '\n';
  }
  return out.str();
}

bool SparseBinaryMatrix::at(int row, int col) const {
  if (row < 0 || row >= rows || col < 0 || col >= cols) {
    throw Error("matrix index out of range");
  }
  const auto& support = row_support[row];
  return std::binary_search(support.begin(), support.end(), col);
}

long long SparseBinaryMatrix::ones() const {
  long long total = 0;
  for (const auto& support : row_support) {
    total += static_cast<long long>(support.size());
  }
  return total;
}

SparseBinaryMatrix lift(const ExponentMatrix& e) {
  e.validate();
  const int p = e.lifting;
  SparseBinaryMatrix h;
  h.rows = e.block_rows * p;
  h.cols = e.block_cols * p;
  h.row_support.assign(h.rows, {});
  h.col_support.assign(h.cols, {});
  for (int i = 0; i < e.block_rows; ++i) {
    for (int j = 0; j < e.block_cols; ++j) {
      int s = e.shifts[i][j];
      if (s == kNoShift) {
        continue;
      }
      for (int r = 0; r < p; ++r) {
        int row = i * p + r;
        int col = j * p + (r + s) % p;
        h.row_support[row].push_back(col);
        h.col_support[col].push_back(row);
      }
    }
  }
  for (auto& support : h.row_support) {
    std::sort(support.begin(), support.end());
  }
  for (auto& support : h.col_support) {
    std::sort(support.begin(), support.end());
  }
  return h;
}

std::optional<int> TannerGraph::variable_degree() const {
  if (variables == 0) {
    return std::nullopt;
  }
  int degree = static_cast<int>(var_neighbors[0].size());
  for (const auto& support : var_neighbors) {
    if (static_cast<int>(support.size()) != degree) {
      return std::nullopt;
    }
  }
  return degree;
}

TannerGraph tanner(const SparseBinaryMatrix& h) {
  TannerGraph g;
  g.variables = h.cols;
  g.checks = h.rows;
  g.var_neighbors = h.col_support;
  g.check_neighbors = h.row_support;
  return g;
}

int gf2_rank(const SparseBinaryMatrix& h) {
  const int words = (h.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(
      h.rows, std::vector<std::uint64_t>(words, 0));
  for (int r = 0; r < h.rows; ++r) {
    for (int c : h.row_support[r]) {
      rows[r][c / 64] ^= std::uint64_t{1} << (c % 64);
    }
  }
  int rank = 0;
  for (int c = 0; c < h.cols && rank < h.rows; ++c) {
    const int word = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    int pivot = -1;
    for (int r = rank; r < h.rows; ++r) {
      if (rows[r][word] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < h.rows; ++r) {
      if (r != rank && (rows[r][word] & bit)) {
        for (int w = word; w < words; ++w) {
          rows[r][w] ^= rows[rank][w];
        }
      }
    }
    ++rank;
  }
  return rank;
}

void emit_alist(const SparseBinaryMatrix& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open " + path + " for writing");
  }
  int max_col = 0;
  int max_row = 0;
  for (const auto& support : h.col_support) {
    max_col = std::max(max_col, static_cast<int>(support.size()));
  }
  for (const auto& support : h.row_support) {
    max_row = std::max(max_row, static_cast<int>(support.size()));
  }
  out << h.cols << ' ' << h.rows << '\n' << max_col << ' ' << max_row << '\n';
  for (int c = 0; c < h.cols; ++c) {
    out << h.col_support[c].size() << (c + 1 < h.cols ? ' ' : '\n');
  }
  if (h.cols == 0) {
    out << '\n';
  }
  for (int r = 0; r < h.rows; ++r) {
    out << h.row_support[r].size() << (r + 1 < h.rows ? ' ' : '\n');
  }
  if (h.rows == 0) {
    out << '\n';
  }
  for (const auto& support : h.col_support) {
    for (std::size_t k = 0; k < support.size(); ++k) {
      out << support[k] + 1 << (k + 1 < support.size() ? ' ' : '\n');
    }
    if (support.empty()) {
      out << '\n';
    }
  }
  for (const auto& support : h.row_support) {
    for (std::size_t k = 0; k < support.size(); ++k) {
      out << support[k] + 1 << (k + 1 < support.size() ? ' ' : '\n');
    }
    if (support.empty()) {
      out << '\n';
    }
  }
  out.flush();
  if (!out) {
    throw Error("write to " + path + " failed");
  }
}

SparseBinaryMatrix parse_alist(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open " + path);
  }
  int cols = 0;
  int rows = 0;
  int max_col = 0;
  int max_row = 0;
  if (!(in >> cols >> rows >> max_col >> max_row) || cols < 0 || rows < 0) {
    throw Error("malformed alist header in " + path);
  }
  std::vector<int> col_deg(cols);
  std::vector<int> row_deg(rows);
  for (int c = 0; c < cols; ++c) {
    if (!(in >> col_deg[c]) || col_deg[c] < 0 || col_deg[c] > rows) {
      throw Error("bad column degree in " + path);
    }
  }
  for (int r = 0; r < rows; ++r) {
    if (!(in >> row_deg[r]) || row_deg[r] < 0 || row_deg[r] > cols) {
      throw Error("bad row degree in " + path);
    }
  }
  SparseBinaryMatrix h;
  h.rows = rows;
  h.cols = cols;
  h.row_support.assign(rows, {});
  h.col_support.assign(cols, {});
  // Index lists may be zero-padded to the max degree; zeros are skipped.
  auto read_list = [&](int count, int pad_to, int upper,
                       std::vector<int>& into) {
    int seen = 0;
    while (seen < count || (pad_to > 0 && seen < pad_to)) {
      int value = 0;
      if (!(in >> value)) {
        if (seen >= count) {
          break;  // unpadded file
        }
        throw Error("alist index list ended early in " + path);
      }
      if (value == 0) {
        ++seen;
        continue;
      }
      if (value < 1 || value > upper) {
        throw Error("alist index out of range in " + path);
      }
      into.push_back(value - 1);
      ++seen;
    }
  };
  // Peek ahead to decide between padded and unpadded layout: count the
  // remaining integers and compare with the two possible totals.
  std::vector<long long> tail;
  {
    long long value = 0;
    auto pos = in.tellg();
    while (in >> value) {
      tail.push_back(value);
    }
    in.clear();
    in.seekg(pos);
  }
  long long unpadded = 0;
  for (int c = 0; c < cols; ++c) {
    unpadded += col_deg[c];
  }
  for (int r = 0; r < rows; ++r) {
    unpadded += row_deg[r];
  }
  const long long padded =
      static_cast<long long>(cols) * max_col + static_cast<long long>(rows) * max_row;
  const bool is_padded =
      static_cast<long long>(tail.size()) == padded && padded != unpadded;
  for (int c = 0; c < cols; ++c) {
    read_list(col_deg[c], is_padded ? max_col : 0, rows, h.col_support[c]);
  }
  for (int r = 0; r < rows; ++r) {
    read_list(row_deg[r], is_padded ? max_row : 0, cols, h.row_support[r]);
  }
  for (int c = 0; c < cols; ++c) {
    if (static_cast<int>(h.col_support[c].size()) != col_deg[c]) {
      throw Error("column degree mismatch in " + path);
    }
    std::sort(h.col_support[c].begin(), h.col_support[c].end());
  }
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(h.row_support[r].size()) != row_deg[r]) {
      throw Error("row degree mismatch in " + path);
    }
    std::sort(h.row_support[r].begin(), h.row_support[r].end());
  }
  // Cross-validate the two adjacency copies.
  SparseBinaryMatrix check = h;
  for (auto& support : check.col_support) {
    support.clear();
  }
  for (int r = 0; r < rows; ++r) {
    for (int c : h.row_support[r]) {
      check.col_support[c].push_back(r);
    }
  }
  if (check.col_support != h.col_support) {
    throw Error("alist row and column lists disagree in " + path);
  }
  return h;
}

int tanner_girth(const TannerGraph& g) {
  // BFS girth: for each variable-node root, the shortest cycle through the
  // root is dist(x) + dist(w) + 1 minimised over non-tree edges (x, w); the
  // minimum over roots is exact because every cycle contains a variable.
  const int total = g.variables + g.checks;
  if (total == 0) {
    return Graph::kInfiniteGirth;
  }
  auto neighbors = [&](int node) -> const std::vector<int>& {
    return node < g.variables ? g.var_neighbors[node]
                              : g.check_neighbors[node - g.variables];
  };
  auto encode = [&](int node, bool is_var) {
    return is_var ? node : g.variables + node;
  };
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(total);
  std::vector<int> parent(total);
  for (int root = 0; root < g.variables; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue;
    dist[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (best != std::numeric_limits<int>::max() && 2 * dist[x] + 1 >= best) {
        break;
      }
      const bool x_is_var = x < g.variables;
      for (int nb : neighbors(x)) {
        int w = encode(nb, !x_is_var);
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          parent[w] = x;
          queue.push_back(w);
        } else if (w != parent[x] && x != parent[w]) {
          best = std::min(best, dist[x] + dist[w] + 1);
        }
      }
    }
    if (best == 4) {
      break;  // nothing shorter exists in a bipartite graph
    }
  }
  return best == std::numeric_limits<int>::max() ? Graph::kInfiniteGirth : best;
}

namespace {

/**
 * Breadth-first search over block-walk states (column, accumulated shift,
 * last row) with a fixed first step (j0, i1, j1).  A walk closes into a
 * 2k-cycle when it re-enters column j0 with zero accumulated shift through
 * a row other than i1.  Returns the shortest closure below `bound`, or
 * INT_MAX.
 */
int shortest_closure(const ExponentMatrix& e, int j0, int i1, int j1,
                     int bound, std::vector<int>& depth_of) {
  const int p = e.lifting;
  const int gamma = e.block_rows;
  auto state_id = [&](int col, int shift, int row) {
    return (col * p + shift) * gamma + row;
  };
  std::fill(depth_of.begin(), depth_of.end(), -1);
  std::deque<int> queue;
  const int d1 = positive_mod(e.shifts[i1][j1] - e.shifts[i1][j0], p);
  depth_of[state_id(j1, d1, i1)] = 1;
  queue.push_back(state_id(j1, d1, i1));
  int best = std::numeric_limits<int>::max();
  while (!queue.empty()) {
    const int state = queue.front();
    queue.pop_front();
    const int row = state % gamma;
    const int shift = (state / gamma) % p;
    const int col = state / (gamma * p);
    const int depth = depth_of[state];
    if (2 * (depth + 1) >= std::min(best, bound)) {
      continue;
    }
    for (int next_row = 0; next_row < gamma; ++next_row) {
      if (next_row == row || e.shifts[next_row][col] == kNoShift) {
        continue;
      }
      for (int next_col = 0; next_col < e.block_cols; ++next_col) {
        if (next_col == col || e.shifts[next_row][next_col] == kNoShift) {
          continue;
        }
        const int next_shift = positive_mod(
            shift + e.shifts[next_row][next_col] - e.shifts[next_row][col], p);
        if (next_col == j0 && next_shift == 0 && next_row != i1) {
          best = std::min(best, 2 * (depth + 1));
          continue;
        }
        const int next_state = state_id(next_col, next_shift, next_row);
        if (depth_of[next_state] < 0) {
          depth_of[next_state] = depth + 1;
          queue.push_back(next_state);
        }
      }
    }
  }
  return best;
}

}  // namespace

int girth_qc(const ExponentMatrix& e) {
  e.validate();
  const int p = e.lifting;
  int best = std::numeric_limits<int>::max();
  std::vector<int> depth_of(
      static_cast<std::size_t>(e.block_cols) * p * e.block_rows);
  for (int j0 = 0; j0 < e.block_cols && best > 4; ++j0) {
    for (int i1 = 0; i1 < e.block_rows && best > 4; ++i1) {
      if (e.shifts[i1][j0] == kNoShift) {
        continue;
      }
      for (int j1 = 0; j1 < e.block_cols && best > 4; ++j1) {
        if (j1 == j0 || e.shifts[i1][j1] == kNoShift) {
          continue;
        }
        best = std::min(best, shortest_closure(e, j0, i1, j1, best, depth_of));
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? Graph::kInfiniteGirth : best;
}

namespace {

/** A closed block walk: columns j_0..j_{k-1} and rows i_1..i_k. */
struct BlockCycle {
  std::vector<int> cols;
  std::vector<int> rows;
};

/**
 * Canonical key of a block cycle under rotation and reflection: the
 * minimal rotation of its (row, col) edge trace, read in either direction.
 */
std::vector<int> block_cycle_key(const BlockCycle& walk, int eta) {
  const int k = static_cast<int>(walk.rows.size());
  std::vector<int> trace(2 * k);
  for (int t = 0; t < k; ++t) {
    const int prev_col = walk.cols[t];
    const int next_col = walk.cols[(t + 1) % k];
    trace[2 * t] = walk.rows[t] * eta + prev_col;
    trace[2 * t + 1] = walk.rows[t] * eta + next_col;
  }
  std::vector<int> best = trace;
  std::vector<int> candidate(2 * k);
  auto consider = [&](const std::vector<int>& base) {
    for (int rot = 0; rot < k; ++rot) {
      for (int t = 0; t < 2 * k; ++t) {
        candidate[t] = base[(t + 2 * rot) % (2 * k)];
      }
      if (candidate < best) {
        best = candidate;
      }
    }
  };
  consider(trace);
  std::reverse(trace.begin(), trace.end());
  consider(trace);
  return best;
}

/** Alternating node sequence v_0, c_0, v_1, c_1, ... of a lifted cycle. */
std::vector<int> cycle_sequence(const std::vector<int>& vars,
                                const std::vector<int>& checks) {
  const int k = static_cast<int>(vars.size());
  std::vector<int> seq(2 * k);
  for (int t = 0; t < k; ++t) {
    seq[2 * t] = vars[t];
    seq[2 * t + 1] = checks[t];
  }
  return seq;
}

/**
 * Canonical node sequence of a lifted cycle: minimal over the k rotations
 * (by whole var-check steps) of both traversal directions.  Variables stay
 * at even positions.
 */
std::vector<int> canonical_cycle(const std::vector<int>& seq) {
  const int len = static_cast<int>(seq.size());
  const int k = len / 2;
  std::vector<int> best = seq;
  std::vector<int> candidate(len);
  auto consider = [&](const std::vector<int>& base) {
    for (int rot = 0; rot < k; ++rot) {
      for (int t = 0; t < len; ++t) {
        candidate[t] = base[(t + 2 * rot) % len];
      }
      if (candidate < best) {
        best = candidate;
      }
    }
  };
  consider(seq);
  // Reversed traversal: v_0, c_{k-1}, v_{k-1}, c_{k-2}, ..., v_1, c_0.
  std::vector<int> reflected(len);
  for (int t = 0; t < k; ++t) {
    reflected[2 * t] = seq[(2 * (k - t)) % len];
    reflected[2 * t + 1] = seq[2 * (k - 1 - t) + 1];
  }
  consider(reflected);
  return best;
}

/** Applies the shift automorphism r -> r + d to a node sequence. */
std::vector<int> shift_sequence(const std::vector<int>& seq, int d, int p) {
  std::vector<int> out(seq.size());
  for (std::size_t t = 0; t < seq.size(); ++t) {
    out[t] = (seq[t] / p) * p + (seq[t] % p + d) % p;
  }
  return out;
}

CycleWitness decode_cycle(const std::vector<int>& seq, int p, int orbit_size) {
  const int k = static_cast<int>(seq.size()) / 2;
  CycleWitness witness;
  witness.length = 2 * k;
  witness.orbit_size = orbit_size;
  witness.variables.resize(k);
  witness.checks.resize(k);
  for (int t = 0; t < k; ++t) {
    witness.variables[t] = seq[2 * t];
    witness.checks[t] = seq[2 * t + 1];
  }
  witness.block_trace.reserve(2 * k);
  for (int t = 0; t < k; ++t) {
    const int row = witness.checks[t] / p;
    witness.block_trace.emplace_back(row, witness.variables[t] / p);
    witness.block_trace.emplace_back(row,
                                     witness.variables[(t + 1) % k] / p);
  }
  return witness;
}

/**
 * Lifts a block cycle starting at residue 0.  Returns the node sequence
 * when the lift is simple, nullopt otherwise (simplicity is invariant
 * under the shift automorphism, so one residue decides for all).
 */
std::optional<std::vector<int>> lift_block_cycle(const ExponentMatrix& e,
                                                 const BlockCycle& walk) {
  const int p = e.lifting;
  const int k = static_cast<int>(walk.rows.size());
  std::vector<int> vars(k);
  std::vector<int> checks(k);
  int shift = 0;
  vars[0] = walk.cols[0] * p + shift;
  for (int t = 0; t < k; ++t) {
    const int row = walk.rows[t];
    const int prev_col = walk.cols[t];
    const int next_col = walk.cols[(t + 1) % k];
    const int check_res = positive_mod(shift - e.shifts[row][prev_col], p);
    checks[t] = row * p + check_res;
    shift = positive_mod(
        shift + e.shifts[row][next_col] - e.shifts[row][prev_col], p);
    if (t + 1 < k) {
      vars[t + 1] = next_col * p + shift;
    }
  }
  auto distinct = [](std::vector<int> values) {
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
  };
  if (!distinct(vars) || !distinct(checks)) {
    return std::nullopt;
  }
  return cycle_sequence(vars, checks);
}

/** One cycle orbit: the canonical members and the representative. */
struct CycleOrbit {
  std::vector<std::vector<int>> members;  ///< canonical sequences, sorted
  int length = 0;
};

/**
 * All simple-cycle orbits of length <= max_len, found by enumerating
 * non-backtracking closed block walks with zero alternating shift sum,
 * deduplicating on the block level, and lifting each survivor once.
 */
std::vector<CycleOrbit> cycle_orbits(const ExponentMatrix& e, int max_len) {
  e.validate();
  if (max_len > 12) {
    throw ResourceLimitError("cycle enumeration is capped at length 12");
  }
  const int p = e.lifting;
  const int k_max = max_len / 2;
  std::vector<CycleOrbit> orbits;
  if (k_max < 2) {
    return orbits;
  }
  std::set<std::vector<int>> seen_blocks;
  BlockCycle walk;
  walk.cols.reserve(k_max);
  walk.rows.reserve(k_max);

  auto record = [&](const BlockCycle& closed) {
    auto key = block_cycle_key(closed, e.block_cols);
    if (!seen_blocks.insert(std::move(key)).second) {
      return;
    }
    auto lifted = lift_block_cycle(e, closed);
    if (!lifted) {
      return;
    }
    CycleOrbit orbit;
    orbit.length = 2 * static_cast<int>(closed.rows.size());
    std::set<std::vector<int>> members;
    for (int d = 0; d < p; ++d) {
      members.insert(canonical_cycle(shift_sequence(*lifted, d, p)));
    }
    orbit.members.assign(members.begin(), members.end());
    orbits.push_back(std::move(orbit));
  };

  // Depth-first search over walks j_0 -i_1- j_1 -i_2- ... with consecutive
  // columns and consecutive rows distinct; sums are tracked mod p.
  auto dfs = [&](auto&& self, int j0, int i1, int sum) -> void {
    const int t = static_cast<int>(walk.rows.size());
    const int cur_col = walk.cols.back();
    const int last_row = walk.rows.back();
    if (t >= k_max) {
      return;
    }
    for (int row = 0; row < e.block_rows; ++row) {
      if (row == last_row || e.shifts[row][cur_col] == kNoShift) {
        continue;
      }
      for (int col = 0; col < e.block_cols; ++col) {
        if (col == cur_col || e.shifts[row][col] == kNoShift) {
          continue;
        }
        const int next_sum = positive_mod(
            sum + e.shifts[row][col] - e.shifts[row][cur_col], p);
        if (col == j0 && next_sum == 0 && row != i1) {
          walk.rows.push_back(row);
          record(walk);
          walk.rows.pop_back();
        }
        walk.rows.push_back(row);
        walk.cols.push_back(col);
        self(self, j0, i1, next_sum);
        walk.cols.pop_back();
        walk.rows.pop_back();
      }
    }
  };

  for (int j0 = 0; j0 < e.block_cols; ++j0) {
    for (int i1 = 0; i1 < e.block_rows; ++i1) {
      if (e.shifts[i1][j0] == kNoShift) {
        continue;
      }
      for (int j1 = 0; j1 < e.block_cols; ++j1) {
        if (j1 == j0 || e.shifts[i1][j1] == kNoShift) {
          continue;
        }
        const int sum =
            positive_mod(e.shifts[i1][j1] - e.shifts[i1][j0], p);
        walk.cols = {j0, j1};
        walk.rows = {i1};
        dfs(dfs, j0, i1, sum);
      }
    }
  }
  walk.cols.clear();
  walk.rows.clear();
  return orbits;
}

}  // namespace

std::vector<CycleWitness> enumerate_cycles(const ExponentMatrix& e,
                                           int max_len) {
  auto orbits = cycle_orbits(e, max_len);
  std::vector<CycleWitness> result;
  result.reserve(orbits.size());
  for (const auto& orbit : orbits) {
    result.push_back(decode_cycle(orbit.members.front(), e.lifting,
                                  static_cast<int>(orbit.members.size())));
  }
  std::sort(result.begin(), result.end(),
            [](const CycleWitness& a, const CycleWitness& b) {
              return std::tie(a.length, a.variables, a.checks) <
                     std::tie(b.length, b.variables, b.checks);
            });
  return result;
}

namespace {

void require_variable_regular(const ExponentMatrix& e) {
  int degree = -1;
  for (int j = 0; j < e.block_cols; ++j) {
    int col_degree = 0;
    for (int i = 0; i < e.block_rows; ++i) {
      if (e.shifts[i][j] != kNoShift) {
        ++col_degree;
      }
    }
    if (degree < 0) {
      degree = col_degree;
    } else if (degree != col_degree) {
      throw Error(
          "detector requires a variable-regular code; block columns " +
          std::to_string(j) + " and 0 have different degrees");
    }
  }
}

/** The VN-graph image of one or two lifted cycles, as a plain Graph. */
Graph vn_union_graph(const std::vector<const std::vector<int>*>& seqs) {
  std::vector<int> vars;
  for (const auto* seq : seqs) {
    for (std::size_t t = 0; t < seq->size(); t += 2) {
      vars.push_back((*seq)[t]);
    }
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  Graph g(static_cast<int>(vars.size()));
  auto local = [&](int var) {
    return static_cast<int>(
        std::lower_bound(vars.begin(), vars.end(), var) - vars.begin());
  };
  for (const auto* seq : seqs) {
    const int k = static_cast<int>(seq->size()) / 2;
    for (int t = 0; t < k; ++t) {
      const int u = local((*seq)[2 * t]);
      const int v = local((*seq)[2 * ((t + 1) % k)]);
      if (!g.has_edge(u, v)) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

SharedPattern classify_overlap(const std::vector<int>& seq_a,
                               const std::vector<int>& seq_b) {
  static const std::string theta222 =
      canonical_form(make_named(NamedKind::theta, 2, 2, 2));
  static const std::string theta133 =
      canonical_form(make_named(NamedKind::theta, 1, 3, 3));
  static const std::string d440 =
      canonical_form(make_named(NamedKind::dumbbell, 4, 4, 0));
  const std::string form = canonical_form(vn_union_graph({&seq_a, &seq_b}));
  if (form == theta222) {
    return SharedPattern::theta222;
  }
  if (form == theta133) {
    return SharedPattern::theta133;
  }
  if (form == d440) {
    return SharedPattern::d440;
  }
  return SharedPattern::other;
}

std::vector<int> sorted_slice(const std::vector<int>& seq, int parity) {
  std::vector<int> out;
  out.reserve(seq.size() / 2);
  for (std::size_t t = parity; t < seq.size(); t += 2) {
    out.push_back(seq[t]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return static_cast<int>(common.size());
}

}  // namespace

std::vector<SharedCyclePair> detect_shared_8cycles(const ExponentMatrix& e) {
  e.validate();
  require_variable_regular(e);
  const int p = e.lifting;
  auto orbits = cycle_orbits(e, 8);

  // Flatten the length-8 orbits into one indexed member list.
  struct Member {
    const std::vector<int>* seq;
    std::vector<int> vars;
    int orbit_index;
  };
  std::vector<Member> members;
  std::map<std::vector<int>, int> index_of;
  std::vector<int> orbit_sizes;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (orbits[o].length != 8) {
      continue;
    }
    orbit_sizes.push_back(static_cast<int>(orbits[o].members.size()));
    for (const auto& seq : orbits[o].members) {
      index_of.emplace(seq, static_cast<int>(members.size()));
      members.push_back(
          {&seq, sorted_slice(seq, 0), static_cast<int>(orbit_sizes.size()) - 1});
    }
  }

  std::map<int, std::vector<int>> cycles_through;
  for (std::size_t m = 0; m < members.size(); ++m) {
    for (int var : members[m].vars) {
      cycles_through[var].push_back(static_cast<int>(m));
    }
  }
  std::set<std::pair<int, int>> candidate_pairs;
  for (const auto& [var, list] : cycles_through) {
    for (std::size_t x = 0; x < list.size(); ++x) {
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        candidate_pairs.emplace(std::min(list[x], list[y]),
                                std::max(list[x], list[y]));
      }
    }
  }

  auto shifted_index = [&](int member, int d) {
    auto key = canonical_cycle(shift_sequence(*members[member].seq, d, p));
    auto it = index_of.find(key);
    if (it == index_of.end()) {
      throw Error("internal: shift image of a cycle is not a known cycle");
    }
    return it->second;
  };

  std::vector<SharedCyclePair> result;
  std::set<std::pair<int, int>> emitted;
  for (const auto& pair : candidate_pairs) {
    if (emitted.count(pair)) {
      continue;
    }
    // Normalise the pair over the shift automorphism.
    std::set<std::pair<int, int>> orbit_pairs;
    for (int d = 0; d < p; ++d) {
      const int a = shifted_index(pair.first, d);
      const int b = shifted_index(pair.second, d);
      orbit_pairs.emplace(std::min(a, b), std::max(a, b));
    }
    std::pair<int, int> canonical = *std::min_element(
        orbit_pairs.begin(), orbit_pairs.end(),
        [&](const auto& x, const auto& y) {
          return std::tie(*members[x.first].seq, *members[x.second].seq) <
                 std::tie(*members[y.first].seq, *members[y.second].seq);
        });
    emitted.insert(orbit_pairs.begin(), orbit_pairs.end());

    const Member& first = members[canonical.first];
    const Member& second = members[canonical.second];
    SharedCyclePair out;
    out.first = decode_cycle(*first.seq, p, orbit_sizes[first.orbit_index]);
    out.second = decode_cycle(*second.seq, p, orbit_sizes[second.orbit_index]);
    out.shared_variables = intersection_size(first.vars, second.vars);
    out.shared_checks = intersection_size(sorted_slice(*first.seq, 1),
                                          sorted_slice(*second.seq, 1));
    out.pattern = classify_overlap(*first.seq, *second.seq);
    out.orbit_size = static_cast<int>(orbit_pairs.size());
    result.push_back(std::move(out));
  }
  std::sort(result.begin(), result.end(),
            [](const SharedCyclePair& a, const SharedCyclePair& b) {
              return std::tie(a.first.variables, a.second.variables) <
                     std::tie(b.first.variables, b.second.variables);
            });
  return result;
}

namespace {

/** Pattern graph of a chorded-cycle variant. */
Graph t_pattern(TVariant variant) {
  switch (variant) {
    case TVariant::t1:
      return make_named(NamedKind::t_pattern_vn, 1);
    case TVariant::t2:
      return make_named(NamedKind::t_pattern_vn, 2);
    case TVariant::t3:
      return make_named(NamedKind::t_pattern_vn, 3);
  }
  throw Error("unknown substructure variant");
}

std::vector<int> common_checks(const TannerGraph& g, int u, int v) {
  std::vector<int> out;
  std::set_intersection(g.var_neighbors[u].begin(), g.var_neighbors[u].end(),
                        g.var_neighbors[v].begin(), g.var_neighbors[v].end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<SubstructureWitness> detect_T(const TannerGraph& g,
                                          TVariant variant) {
  if (!g.variable_degree()) {
    throw Error("detect_T requires a variable-regular Tanner graph");
  }
  const int girth = tanner_girth(g);
  if (girth < 6) {
    throw Error("detect_T requires girth at least 6, got " +
                std::to_string(girth));
  }
  const Graph pattern = t_pattern(variant);
  const int n = pattern.order();

  // Order pattern vertices so each (after the first) sees as many already
  // placed neighbours as possible; ties go to the higher-degree vertex.
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  {
    int start = 0;
    for (int v = 1; v < n; ++v) {
      if (pattern.degree(v) > pattern.degree(start)) {
        start = v;
      }
    }
    order.push_back(start);
    placed[start] = 1;
    while (static_cast<int>(order.size()) < n) {
      int pick = -1;
      int pick_back = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) {
          continue;
        }
        int back = 0;
        for (int u : pattern.neighbors(v)) {
          back += placed[u];
        }
        if (back > pick_back ||
            (back == pick_back && pick >= 0 &&
             pattern.degree(v) > pattern.degree(pick))) {
          pick = v;
          pick_back = back;
        }
      }
      order.push_back(pick);
      placed[pick] = 1;
    }
  }
  std::vector<std::vector<int>> back_neighbors(n);
  {
    std::vector<int> level_of(n);
    for (int level = 0; level < n; ++level) {
      level_of[order[level]] = level;
    }
    for (int level = 0; level < n; ++level) {
      for (int u : pattern.neighbors(order[level])) {
        if (level_of[u] < level) {
          back_neighbors[level].push_back(u);
        }
      }
    }
  }

  // Variable-node adjacency of the Tanner graph (vars sharing a check).
  std::vector<std::vector<int>> vn_adj(g.variables);
  for (int v = 0; v < g.variables; ++v) {
    for (int c : g.var_neighbors[v]) {
      for (int w : g.check_neighbors[c]) {
        if (w != v) {
          vn_adj[v].push_back(w);
        }
      }
    }
    std::sort(vn_adj[v].begin(), vn_adj[v].end());
    vn_adj[v].erase(std::unique(vn_adj[v].begin(), vn_adj[v].end()),
                    vn_adj[v].end());
  }

  std::set<std::pair<std::vector<int>, std::vector<int>>> witnesses;
  std::vector<int> image(n, -1);
  std::vector<char> used(g.variables, 0);

  auto complete = [&]() {
    // Checks are forced: girth >= 6 leaves at most one common check per
    // adjacent pair, and pattern edges must map to distinct checks.  Each
    // check must meet exactly its two endpoints within the image: a check
    // touching a third image variable would have degree three inside any
    // trapping set containing the image, so that set could not be
    // elementary and the substructure poses no threat.
    std::vector<int> checks;
    checks.reserve(pattern.size());
    for (const auto& [u, v] : pattern.edges()) {
      auto shared = common_checks(g, image[u], image[v]);
      if (shared.empty()) {
        return;
      }
      const int check = shared.front();
      int inside = 0;
      for (int w : g.check_neighbors[check]) {
        inside += used[w];
      }
      if (inside != 2) {
        return;
      }
      checks.push_back(check);
    }
    std::sort(checks.begin(), checks.end());
    if (std::adjacent_find(checks.begin(), checks.end()) != checks.end()) {
      return;
    }
    std::vector<int> vars(image.begin(), image.end());
    std::sort(vars.begin(), vars.end());
    witnesses.emplace(std::move(vars), std::move(checks));
  };

  auto extend = [&](auto&& self, int level) -> void {
    if (level == n) {
      complete();
      return;
    }
    const int vertex = order[level];
    const auto& back = back_neighbors[level];
    auto try_candidate = [&](int candidate) {
      if (used[candidate]) {
        return;
      }
      for (int u : back) {
        if (!std::binary_search(vn_adj[candidate].begin(),
                                vn_adj[candidate].end(), image[u])) {
          return;
        }
      }
      image[vertex] = candidate;
      used[candidate] = 1;
      self(self, level + 1);
      used[candidate] = 0;
      image[vertex] = -1;
    };
    if (back.empty()) {
      for (int candidate = 0; candidate < g.variables; ++candidate) {
        try_candidate(candidate);
      }
    } else {
      for (int candidate : vn_adj[image[back.front()]]) {
        try_candidate(candidate);
      }
    }
  };
  extend(extend, 0);

  std::vector<SubstructureWitness> result;
  result.reserve(witnesses.size());
  for (const auto& [vars, checks] : witnesses) {
    result.push_back({vars, checks, 1});
  }
  return result;
}

std::vector<SubstructureWitness> detect_T(const ExponentMatrix& e,
                                          TVariant variant) {
  e.validate();
  require_variable_regular(e);
  const int p = e.lifting;
  auto all = detect_T(tanner(lift(e)), variant);

  auto shift_sorted = [&](const std::vector<int>& nodes, int d) {
    std::vector<int> out(nodes.size());
    for (std::size_t t = 0; t < nodes.size(); ++t) {
      out[t] = (nodes[t] / p) * p + (nodes[t] % p + d) % p;
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::vector<SubstructureWitness> result;
  for (const auto& witness : all) {
    std::set<Key> orbit;
    for (int d = 0; d < p; ++d) {
      orbit.emplace(shift_sorted(witness.variables, d),
                    shift_sorted(witness.checks, d));
    }
    const Key& canonical = *orbit.begin();
    Key self{witness.variables, witness.checks};
    if (self == canonical) {
      result.push_back(
          {canonical.first, canonical.second, static_cast<int>(orbit.size())});
    }
  }
  std::sort(result.begin(), result.end(),
            [](const SubstructureWitness& a, const SubstructureWitness& b) {
              return std::tie(a.variables, a.checks) <
                     std::tie(b.variables, b.checks);
            });
  return result;
}

std::vector<EtsRecord> ets_search_in_code(const ExponentMatrix& e, int a_max,
                                          int b_max, long long node_budget) {
  e.validate();
  if (a_max < 1 || b_max < 0) {
    throw Error("ets_search_in_code needs a_max >= 1 and b_max >= 0");
  }
  if (a_max > 12) {
    throw ResourceLimitError("ets_search_in_code is capped at a_max = 12");
  }
  require_variable_regular(e);
  const int girth = girth_qc(e);
  if (girth < 6) {
    throw Error("ets_search_in_code requires girth at least 6, got " +
                std::to_string(girth));
  }
  const TannerGraph g = tanner(lift(e));
  const int gamma = *g.variable_degree();
  const int p = e.lifting;
  const bool triangle_free = girth >= 8;

  // Arithmetic feasibility: a connected (a, b) trapping set has
  // m = (a*gamma - b)/2 edges with a-1 <= m <= cap(a), where the cap is
  // a^2/4 for girth >= 8 (triangle-free VN graph) and C(a,2) otherwise.
  auto cell_feasible = [&](int a, int b) {
    if ((static_cast<long long>(a) * gamma - b) % 2 != 0) {
      return false;
    }
    const long long m = (static_cast<long long>(a) * gamma - b) / 2;
    const long long cap = triangle_free
                              ? static_cast<long long>(a) * a / 4
                              : static_cast<long long>(a) * (a - 1) / 2;
    return m >= a - 1 && m <= cap;
  };
  bool any_feasible = false;
  for (int a = 1; a <= a_max && !any_feasible; ++a) {
    for (int b = 0; b <= b_max && !any_feasible; ++b) {
      any_feasible = cell_feasible(a, b);
    }
  }
  if (!any_feasible) {
    return {};
  }

  std::vector<std::vector<int>> vn_adj(g.variables);
  for (int v = 0; v < g.variables; ++v) {
    for (int c : g.var_neighbors[v]) {
      for (int w : g.check_neighbors[c]) {
        if (w != v) {
          vn_adj[v].push_back(w);
        }
      }
    }
    std::sort(vn_adj[v].begin(), vn_adj[v].end());
    vn_adj[v].erase(std::unique(vn_adj[v].begin(), vn_adj[v].end()),
                    vn_adj[v].end());
  }

  std::vector<int> members;           // current set, insertion order
  std::vector<char> in_set(g.variables, 0);
  std::vector<char> forbidden(g.variables, 0);
  std::vector<int> check_load(g.checks, 0);
  int edges = 0;
  long long nodes_visited = 0;
  std::set<std::vector<int>> found;

  auto addable = [&](int v) {
    for (int c : g.var_neighbors[v]) {
      if (check_load[c] >= 2) {
        return false;
      }
    }
    return true;
  };
  auto add_var = [&](int v) {
    for (int c : g.var_neighbors[v]) {
      edges += (check_load[c] == 1);
      ++check_load[c];
    }
    in_set[v] = 1;
    members.push_back(v);
  };
  auto remove_var = [&](int v) {
    members.pop_back();
    in_set[v] = 0;
    for (int c : g.var_neighbors[v]) {
      --check_load[c];
      edges -= (check_load[c] == 1);
    }
  };

  auto grow = [&](auto&& self, int root) -> void {
    if (++nodes_visited > node_budget) {
      throw ResourceLimitError("ets_search_in_code exceeded its node budget");
    }
    const int size = static_cast<int>(members.size());
    const int b = size * gamma - 2 * edges;
    if (b <= b_max) {
      std::vector<int> sorted = members;
      std::sort(sorted.begin(), sorted.end());
      found.insert(std::move(sorted));
    }
    // Even adding a full-degree variable at every step cannot push b below
    // gamma*(2*size - a) + 2*edges at final size a; prune when that floor
    // already exceeds b_max at a = a_max.
    if (static_cast<long long>(gamma) * (2 * size - a_max) - 2 * edges >
        b_max) {
      return;
    }
    if (size == a_max) {
      return;
    }
    std::vector<int> candidates;
    for (int v : members) {
      for (int w : vn_adj[v]) {
        if (w > root && !in_set[w] && !forbidden[w] && addable(w)) {
          candidates.push_back(w);
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (int w : candidates) {
      add_var(w);
      self(self, root);
      remove_var(w);
      forbidden[w] = 1;
    }
    for (int w : candidates) {
      forbidden[w] = 0;
    }
  };

  for (int root = 0; root < g.variables; ++root) {
    add_var(root);
    grow(grow, root);
    remove_var(root);
  }

  // Collapse shift orbits; the enumeration is exhaustive, so every orbit
  // member was found and the orbit size is the count of distinct members.
  auto shift_set = [&](const std::vector<int>& vars, int d) {
    std::vector<int> out(vars.size());
    for (std::size_t t = 0; t < vars.size(); ++t) {
      out[t] = (vars[t] / p) * p + (vars[t] % p + d) % p;
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<EtsRecord> result;
  std::set<std::vector<int>> consumed;
  for (const auto& vars : found) {
    if (consumed.count(vars)) {
      continue;
    }
    std::set<std::vector<int>> orbit;
    for (int d = 0; d < p; ++d) {
      auto member = shift_set(vars, d);
      if (!found.count(member)) {
        throw Error("internal: shift image of a trapping set was not found");
      }
      orbit.insert(std::move(member));
    }
    consumed.insert(orbit.begin(), orbit.end());
    const std::vector<int>& rep = *orbit.begin();

    EtsRecord record;
    record.variables = rep;
    record.a = static_cast<int>(rep.size());
    record.vn_graph = Graph(record.a);
    for (int x = 0; x < record.a; ++x) {
      for (int y = x + 1; y < record.a; ++y) {
        if (!common_checks(g, rep[x], rep[y]).empty()) {
          record.vn_graph.add_edge(x, y);
        }
      }
    }
    record.b = record.a * gamma - 2 * record.vn_graph.size();
    record.rho = record.vn_graph.size() == 0
                     ? 0.0
                     : spectral_radius(build_system_matrix(record.vn_graph));
    record.orbit_size = static_cast<int>(orbit.size());
    result.push_back(std::move(record));
  }
  std::sort(result.begin(), result.end(),
            [](const EtsRecord& a, const EtsRecord& b) {
              return std::tie(a.a, a.b, a.variables) <
                     std::tie(b.a, b.b, b.variables);
            });
  return result;
}

}  // namespace trapset
