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

/**
 * @file trapset_cli.cpp
 * Command-line front end. Subcommands:
 *
 *   turan exact|bound|search   extremal edge counts and families
 *   census                     VN-graph census over an (a, b) sweep
 *   ets bound|min-size|spectrum   trapping-set arithmetic and ranking
 *   qc girth|audit-8cycles|audit-T|ets-search   exponent-matrix audits
 *   sim                        BP frame-error-rate sweep on the AWGN channel
 *   reproduce                  regenerate a reference table and diff it
 *
 * Exit codes: 0 on success, 1 on usage or input errors, 2 when an audit or
 * reproduction found a mismatch, 3 when a resource ceiling was exceeded.
 * --json switches every subcommand to a stable JSON document on stdout.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trapset/census.hpp"
#include "trapset/enumerate.hpp"
#include "trapset/ets.hpp"
#include "trapset/graph.hpp"
#include "trapset/qc.hpp"
#include "trapset/reproduce.hpp"
#include "trapset/sim.hpp"
#include "trapset/turan.hpp"

namespace {

using nlohmann::json;
using namespace trapset;

// Set by subcommand callbacks; main() returns it after a clean parse.
int g_exit = 0;
bool g_json = false;
int g_threads = 1;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cli: cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"order", g.order()}, {"size", g.size()}, {"edges", edges}};
}

std::string graph_text(const Graph& g) {
  std::string text =
      std::to_string(g.order()) + "v/" + std::to_string(g.size()) + "e:";
  for (const auto& [u, v] : g.edges()) {
    text += " " + std::to_string(u) + "-" + std::to_string(v);
  }
  return text;
}

void print_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

/** Pattern graphs accepted by `turan` by name. */
Graph pattern_by_name(const std::string& name) {
  if (name == "g1") return make_named(NamedKind::g1);
  if (name == "g2") return make_named(NamedKind::g2);
  if (name == "g3") return make_named(NamedKind::g3);
  if (name == "theta222") return theta_graph(2, 2, 2);
  throw Error("cli: unknown pattern '" + name + "'");
}

TuranTarget target_by_name(const std::string& name) {
  if (name == "g1") return TuranTarget::g1;
  if (name == "g2") return TuranTarget::g2;
  if (name == "g3") return TuranTarget::g3;
  throw Error("cli: unknown pattern '" + name + "'");
}

EtsRegime regime_by_name(const std::string& name) {
  if (name == "girth8") return EtsRegime::girth8_no_shared_8cycles;
  if (name == "t1") return EtsRegime::girth6_t1_free;
  if (name == "t2") return EtsRegime::girth6_t2_free;
  if (name == "t3") return EtsRegime::girth6_t3_free;
  throw Error("cli: unknown regime '" + name + "'");
}

CensusCriterion criterion_by_name(const std::string& name) {
  if (name == "c4") return CensusCriterion::c4_sharing;
  if (name == "g1") return CensusCriterion::g1;
  if (name == "g2") return CensusCriterion::g2;
  if (name == "g3") return CensusCriterion::g3;
  throw Error("cli: unknown criterion '" + name + "'");
}

/** Parses "lo:hi" or a single integer into an inclusive range. */
std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw Error("cli: malformed range '" + text + "' (expected lo:hi)");
  }
}

/** Parses an Eb/N0 sweep: "start:step:stop", or a comma-separated list of
 * values where "inf" selects the noiseless channel. */
std::vector<double> parse_sweep(const std::string& text) {
  const auto to_value = [](const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    try {
      size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw Error("cli: malformed Eb/N0 value '" + s + "'");
    }
  };
  std::vector<std::string> parts;
  const char sep = text.find(':') != std::string::npos ? ':' : ',';
  std::string part;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(part);
      part.clear();
    } else {
      part += c;
    }
  }
  parts.push_back(part);

  if (sep == ':') {
    if (parts.size() != 3) {
      throw Error("cli: malformed sweep '" + text + "' (expected start:step:stop)");
    }
    const double start = to_value(parts[0]);
    const double step = to_value(parts[1]);
    const double stop = to_value(parts[2]);
    if (!(step > 0) || !std::isfinite(step) || !std::isfinite(start) ||
        !std::isfinite(stop) || stop < start) {
      throw Error("cli: sweep '" + text + "' must have step > 0 and stop >= start");
    }
    std::vector<double> sweep;
    for (double v = start; v <= stop + 1e-9; v += step) sweep.push_back(v);
    return sweep;
  }
  std::vector<double> sweep;
  for (const std::string& p : parts) sweep.push_back(to_value(p));
  return sweep;
}

/** Loads the exponent matrix selected by --code/--file, with its label. */
std::pair<ExponentMatrix, std::string> load_code(const std::string& code,
                                                 const std::string& file) {
  if (!code.empty()) return {builtin_code(code), code};
  if (!file.empty()) {
    return {parse_exponent_matrix(slurp(file)),
            std::filesystem::path(file).stem().string()};
  }
  throw Error("cli: a code is required (--code NAME or --file PATH)");
}

// ---------------------------------------------------------------------------
// turan

void run_turan_exact(const std::string& graph, int n) {
  const TuranResult result = ex_exact(target_by_name(graph), n);
  if (g_json) {
    json doc{{"command", "turan exact"},
             {"graph", graph},
             {"n", n},
             {"value", static_cast<long long>(result.value)}};
    if (result.extremal_classes) {
      json classes = json::array();
      for (const Graph& g : *result.extremal_classes) classes.push_back(graph_json(g));
      doc["extremal_classes"] = classes;
    } else {
      doc["extremal_classes"] = nullptr;
    }
    print_json(doc);
    return;
  }
  std::printf("ex(%d, %s) = %lld\n", n, graph.c_str(),
              static_cast<long long>(result.value));
  if (result.extremal_classes) {
    std::printf("extremal classes: %zu\n", result.extremal_classes->size());
    for (const Graph& g : *result.extremal_classes) {
      std::printf("  %s\n", graph_text(g).c_str());
    }
  } else {
    std::printf("extremal classes: not characterised\n");
  }
}

void run_turan_bound(const std::string& family, int n) {
  double bound = 0.0;
  if (family == "theta222") {
    bound = theta222_upper(n);
  } else if (family == "girth8") {
    bound = girth8_family_upper(n);
  } else {
    throw Error("cli: unknown family '" + family + "'");
  }
  const long long cap = static_cast<long long>(std::floor(bound));
  if (g_json) {
    print_json({{"command", "turan bound"},
                {"family", family},
                {"n", n},
                {"bound", bound},
                {"edge_cap", cap}});
    return;
  }
  std::printf("bound(%s, n=%d) = %.6f, edge cap %lld\n", family.c_str(), n,
              bound, cap);
}

void run_turan_search(const std::string& graph, const std::string& family,
                      int n, int ceiling) {
  if (graph.empty() == family.empty()) {
    throw Error("cli: pass exactly one of --graph or --family");
  }
  TuranQuery query;
  query.n = n;
  std::string label;
  if (!graph.empty()) {
    query.family = {pattern_by_name(graph)};
    label = graph;
  } else if (family == "girth8") {
    query.family = girth8_obstruction_family();
    label = family;
  } else {
    throw Error("cli: unknown family '" + family + "'");
  }
  const TuranResult result = brute_force_ex(query, ceiling);
  if (g_json) {
    json classes = json::array();
    for (const Graph& g : *result.extremal_classes) classes.push_back(graph_json(g));
    print_json({{"command", "turan search"},
                {"pattern", label},
                {"n", n},
                {"value", static_cast<long long>(result.value)},
                {"extremal_classes", classes}});
    return;
  }
  std::printf("brute force ex(%d, %s) = %lld\n", n, label.c_str(),
              static_cast<long long>(result.value));
  std::printf("extremal classes: %zu\n", result.extremal_classes->size());
  for (const Graph& g : *result.extremal_classes) {
    std::printf("  %s\n", graph_text(g).c_str());
  }
}

// ---------------------------------------------------------------------------
// census

void run_census(int gamma, int tanner_girth, const std::string& a_range,
                const std::string& b_range, const std::string& criterion,
                int ceiling, const std::string& out) {
  CensusSpec spec;
  spec.gamma = gamma;
  spec.tanner_girth = tanner_girth;
  std::tie(spec.a_lo, spec.a_hi) = parse_range(a_range);
  std::tie(spec.b_lo, spec.b_hi) = parse_range(b_range);
  spec.criterion = criterion_by_name(criterion);
  const std::vector<CensusRow> rows = census(spec, ceiling);
  if (!out.empty()) emit_census_csv(rows, out);
  if (g_json) {
    json rows_json = json::array();
    for (const CensusRow& row : rows) {
      rows_json.push_back({{"set", row.set_label},
                           {"a", row.a},
                           {"b", row.b},
                           {"gamma", row.gamma},
                           {"count", row.count},
                           {"rho_mean", row.rho_mean},
                           {"rho_median", row.rho_median}});
    }
    print_json({{"command", "census"},
                {"gamma", gamma},
                {"tanner_girth", tanner_girth},
                {"criterion", criterion},
                {"rows", rows_json}});
    return;
  }
  std::fputs(format_census_csv(rows).c_str(), stdout);
}

// ---------------------------------------------------------------------------
// ets

void run_ets_bound(const std::string& regime, int gamma, int a) {
  std::optional<int> min_b;
  if (regime == "girth8") {
    min_b = min_b_girth8(a, gamma);
  } else {
    const auto variant = regime == "t1"   ? VnVariant::t1_free
                         : regime == "t2" ? VnVariant::t2_free
                         : regime == "t3" ? VnVariant::t3_free
                                          : throw Error("cli: unknown regime '" +
                                                        regime + "'");
    min_b = min_b_girth6(a, gamma, variant);
  }
  if (g_json) {
    json doc{{"command", "ets bound"},
             {"regime", regime},
             {"gamma", gamma},
             {"a", a}};
    doc["min_b"] = min_b ? json(*min_b) : json(nullptr);
    print_json(doc);
    return;
  }
  if (min_b) {
    std::printf("min b for a=%d, gamma=%d (%s) = %d\n", a, gamma,
                regime.c_str(), *min_b);
  } else {
    std::printf("min b for a=%d, gamma=%d (%s): bound not applicable\n", a,
                gamma, regime.c_str());
  }
}

void run_ets_min_size(const std::string& regime, int gamma, int b,
                      bool no_confirm, int max_a, long long budget) {
  EtsSearchLimits limits;
  limits.max_a = max_a;
  limits.node_budget = budget;
  const MinEtsSize result =
      min_ets_size(gamma, b, regime_by_name(regime), !no_confirm, limits);
  if (g_json) {
    json doc{{"command", "ets min-size"},
             {"regime", regime},
             {"gamma", gamma},
             {"b", b},
             {"a_lower", result.a_lower}};
    doc["a_confirmed"] =
        result.a_confirmed ? json(*result.a_confirmed) : json(nullptr);
    print_json(doc);
    return;
  }
  std::printf("min ETS size for b=%d, gamma=%d (%s): arithmetic lower bound %d\n",
              b, gamma, regime.c_str(), result.a_lower);
  if (no_confirm) return;
  if (result.a_confirmed) {
    std::printf("smallest realizable size: %d\n", *result.a_confirmed);
  } else {
    std::printf("no realizable size up to a=%d\n", max_a);
  }
}

void run_ets_spectrum(int gamma, int a, int b, int tanner_girth, int limit) {
  const std::vector<VnGraph> classes = enumerate_vn(a, b, gamma, tanner_girth);
  struct Entry {
    double rho;
    const VnGraph* vn;
    VnClassification cls;
  };
  std::vector<Entry> entries;
  for (const VnGraph& vn : classes) {
    entries.push_back({spectral_radius(build_system_matrix(vn)), &vn,
                       classify_vn(vn.graph)});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& x, const Entry& y) { return x.rho > y.rho; });
  if (limit > 0 && static_cast<int>(entries.size()) > limit) {
    entries.resize(limit);
  }
  const auto chord_text = [](ChordClass c) {
    return c == ChordClass::pattern_free ? "free" : "containing";
  };
  if (g_json) {
    json rows = json::array();
    for (const Entry& e : entries) {
      rows.push_back(
          {{"rho", e.rho},
           {"graph", graph_json(e.vn->graph)},
           {"c4", e.cls.c4 == C4Class::independent ? "independent" : "interacting"},
           {"g1", chord_text(e.cls.chord[0])},
           {"g2", chord_text(e.cls.chord[1])},
           {"g3", chord_text(e.cls.chord[2])}});
    }
    print_json({{"command", "ets spectrum"},
                {"a", a},
                {"b", b},
                {"gamma", gamma},
                {"tanner_girth", tanner_girth},
                {"class_count", classes.size()},
                {"classes", rows}});
    return;
  }
  std::printf("(%d, %d) ETS classes for gamma=%d, girth %d: %zu\n", a, b,
              gamma, tanner_girth, classes.size());
  int rank = 1;
  for (const Entry& e : entries) {
    std::printf("%3d  rho=%.5f  c4=%s  g1=%s g2=%s g3=%s  %s\n", rank++, e.rho,
                e.cls.c4 == C4Class::independent ? "independent" : "interacting",
                chord_text(e.cls.chord[0]), chord_text(e.cls.chord[1]),
                chord_text(e.cls.chord[2]), graph_text(e.vn->graph).c_str());
  }
}

// ---------------------------------------------------------------------------
// qc

void run_qc_girth(const std::string& code, const std::string& file) {
  const auto [e, label] = load_code(code, file);
  const int girth = girth_qc(e);
  if (g_json) {
    json doc{{"command", "qc girth"}, {"code", label}};
    doc["girth"] = girth == Graph::kInfiniteGirth ? json(nullptr) : json(girth);
    print_json(doc);
    return;
  }
  if (girth == Graph::kInfiniteGirth) {
    std::printf("girth(%s) = infinity (forest)\n", label.c_str());
  } else {
    std::printf("girth(%s) = %d\n", label.c_str(), girth);
  }
}

const char* pattern_name(SharedPattern p) {
  switch (p) {
    case SharedPattern::theta222: return "theta222";
    case SharedPattern::theta133: return "theta133";
    case SharedPattern::d440: return "d440";
    case SharedPattern::other: return "other";
  }
  return "other";
}

void run_qc_audit_8cycles(const std::string& code, const std::string& file) {
  const auto [e, label] = load_code(code, file);
  const std::vector<CycleWitness> cycles = enumerate_cycles(e, 8);
  long long cycle_orbits = 0;
  long long cycle_total = 0;
  for (const CycleWitness& c : cycles) {
    if (c.length != 8) continue;
    ++cycle_orbits;
    cycle_total += c.orbit_size;
  }
  const std::vector<SharedCyclePair> shared = detect_shared_8cycles(e);
  long long pair_total = 0;
  std::map<std::string, long long> by_pattern;
  for (const SharedCyclePair& p : shared) {
    pair_total += p.orbit_size;
    by_pattern[pattern_name(p.pattern)] += p.orbit_size;
  }
  const bool clean = shared.empty();
  if (g_json) {
    json histogram = json::object();
    for (const auto& [name, count] : by_pattern) histogram[name] = count;
    print_json({{"command", "qc audit-8cycles"},
                {"code", label},
                {"girth", girth_qc(e)},
                {"cycle_orbits", cycle_orbits},
                {"cycles", cycle_total},
                {"shared_pair_orbits", shared.size()},
                {"shared_pairs", pair_total},
                {"by_pattern", histogram},
                {"clean", clean}});
  } else {
    std::printf("code %s: girth %d\n", label.c_str(), girth_qc(e));
    std::printf("8-cycles: %lld (in %lld shift orbits)\n", cycle_total,
                cycle_orbits);
    std::printf("sharing 8-cycle pairs: %lld (in %zu shift orbits)\n",
                pair_total, shared.size());
    for (const auto& [name, count] : by_pattern) {
      std::printf("  %s: %lld\n", name.c_str(), count);
    }
    std::printf(clean ? "audit clean: no two 8-cycles share a variable\n"
                      : "audit violated: 8-cycle sharing present\n");
  }
  if (!clean) g_exit = 2;
}

void run_qc_audit_t(const std::string& code, const std::string& file) {
  const auto [e, label] = load_code(code, file);
  bool clean = true;
  json variants_json = json::object();
  std::string text;
  for (const auto [name, variant] :
       {std::pair{"t1", TVariant::t1}, std::pair{"t2", TVariant::t2},
        std::pair{"t3", TVariant::t3}}) {
    const std::vector<SubstructureWitness> found = detect_T(e, variant);
    long long total = 0;
    for (const SubstructureWitness& w : found) total += w.orbit_size;
    if (total > 0) clean = false;
    if (g_json) {
      json entry{{"orbits", found.size()}, {"embeddings", total}};
      if (!found.empty()) {
        entry["witness"] = {{"variables", found.front().variables},
                            {"checks", found.front().checks}};
      }
      variants_json[name] = entry;
    } else {
      text += std::string(name) + ": " + std::to_string(total) +
              " embeddings (" + std::to_string(found.size()) + " orbits)";
      if (!found.empty()) {
        text += "; first witness variables";
        for (int v : found.front().variables) text += " " + std::to_string(v);
      }
      text += "\n";
    }
  }
  if (g_json) {
    print_json({{"command", "qc audit-T"},
                {"code", label},
                {"variants", variants_json},
                {"clean", clean}});
  } else {
    std::printf("code %s: chorded-cycle substructures\n%s", label.c_str(),
                text.c_str());
    std::printf(clean ? "audit clean: no substructure embeds\n"
                      : "audit violated: substructures present\n");
  }
  if (!clean) g_exit = 2;
}

void run_qc_ets_search(const std::string& code, const std::string& file,
                       int max_a, int max_b, long long budget) {
  const auto [e, label] = load_code(code, file);
  const std::vector<EtsRecord> records =
      ets_search_in_code(e, max_a, max_b, budget);
  if (g_json) {
    json rows = json::array();
    for (const EtsRecord& r : records) {
      rows.push_back({{"a", r.a},
                      {"b", r.b},
                      {"rho", r.rho},
                      {"orbit_size", r.orbit_size},
                      {"variables", r.variables}});
    }
    print_json({{"command", "qc ets-search"},
                {"code", label},
                {"max_a", max_a},
                {"max_b", max_b},
                {"records", rows}});
    return;
  }
  std::printf("code %s: %zu trapping-set orbits with a <= %d, b <= %d\n",
              label.c_str(), records.size(), max_a, max_b);
  for (const EtsRecord& r : records) {
    std::string vars;
    for (int v : r.variables) vars += " " + std::to_string(v);
    std::printf("(%d, %d)  rho=%.5f  orbit=%d  variables%s\n", r.a, r.b, r.rho,
                r.orbit_size, vars.c_str());
  }
}

// ---------------------------------------------------------------------------
// sim

void run_sim(const std::string& code, const std::string& alist,
             const std::string& decoder, double norm, int iters,
             const std::string& ebn0, std::uint64_t seed, long long max_frames,
             long long max_errors, bool no_early_stop, double clip,
             const std::string& out, const std::string& plot) {
  if (!code.empty() && !alist.empty()) {
    throw Error("cli: pass --code or --alist, not both");
  }
  DecoderConfig cfg;
  if (decoder == "sum-product") {
    cfg.variant = DecoderVariant::sum_product;
  } else if (decoder == "min-sum") {
    cfg.variant = DecoderVariant::min_sum;
  } else if (decoder == "normalized-min-sum") {
    cfg.variant = DecoderVariant::normalized_min_sum;
  } else {
    throw Error("cli: unknown decoder '" + decoder + "'");
  }
  cfg.normalization = norm;
  cfg.max_iterations = iters;
  cfg.early_stop = !no_early_stop;
  cfg.llr_clip = clip;

  const std::vector<double> sweep = parse_sweep(ebn0);
  StopRule stop;
  stop.max_frames = max_frames;
  stop.max_frame_errors = max_errors;

  SimResult result;
  if (!alist.empty()) {
    result = simulate(parse_alist(alist), cfg, sweep, stop, seed, g_threads,
                      std::filesystem::path(alist).stem().string());
  } else if (!code.empty()) {
    result = simulate(builtin_code(code), cfg, sweep, stop, seed, g_threads, code);
  } else {
    throw Error("cli: a code is required (--code NAME or --alist PATH)");
  }

  emit_fer_csv(result, out);
  if (!plot.empty()) emit_plot_script(result, plot);

  if (g_json) {
    json points = json::array();
    for (const PointResult& p : result.points) {
      points.push_back(
          {{"ebn0_db", p.ebn0_db},
           {"frames", p.frames_sent},
           {"frame_errors", p.frame_errors},
           {"bit_errors", p.bit_errors},
           {"fer", static_cast<double>(p.frame_errors) / p.frames_sent},
           {"avg_iterations", p.avg_iterations}});
    }
    print_json({{"command", "sim"},
                {"code", result.code},
                {"decoder", decoder},
                {"iterations", iters},
                {"seed", seed},
                {"variables", result.variables},
                {"checks", result.checks},
                {"rank", result.rank},
                {"rate", result.rate},
                {"csv", out},
                {"points", points}});
    return;
  }
  std::printf("code %s: %d variables, %d checks, rank %d, rate %.4f\n",
              result.code.c_str(), result.variables, result.checks,
              result.rank, result.rate);
  for (const PointResult& p : result.points) {
    std::printf(
        "Eb/N0 %6.2f dB: %lld frames, %lld errors, FER %.3e, %.2f iters\n",
        p.ebn0_db, p.frames_sent, p.frame_errors,
        static_cast<double>(p.frame_errors) / p.frames_sent, p.avg_iterations);
  }
  std::printf("wrote %s\n", out.c_str());
  if (!plot.empty()) std::printf("wrote %s\n", plot.c_str());
}

// ---------------------------------------------------------------------------
// reproduce

void run_reproduce(const std::string& target, bool extended,
                   const std::string& golden_dir, const std::string& out) {
  const ReproReport report =
      reproduce(parse_repro_target(target), extended, golden_dir);
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw Error("cli: cannot write " + out);
    file << report.generated_csv;
  }
  if (g_json) {
    json mismatches = json::array();
    for (const CellDiff& diff : report.mismatches) {
      mismatches.push_back({{"cell", diff.cell},
                            {"golden", diff.expected},
                            {"regenerated", diff.actual}});
    }
    print_json({{"command", "reproduce"},
                {"target", report.target},
                {"extended", extended},
                {"cells_total", report.cells_total},
                {"cells_matched", report.cells_matched},
                {"mismatches", mismatches},
                {"ok", report.ok()}});
  } else {
    std::fputs(format_report(report).c_str(), stdout);
  }
  if (!report.ok()) g_exit = 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extremal bounds, trapping-set censuses and LDPC code audits"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "emit a JSON document instead of text");
  app.add_option("--threads", g_threads, "worker threads for simulation")
      ->check(CLI::PositiveNumber);

  // turan ------------------------------------------------------------------
  auto* turan = app.add_subcommand("turan", "extremal edge counts");
  turan->require_subcommand(1);
  turan->fallthrough();

  std::string turan_graph;
  int turan_n = 0;
  auto* turan_exact =
      turan->add_subcommand("exact", "exact extremal count with its classes");
  turan_exact->fallthrough();
  turan_exact->add_option("--graph", turan_graph, "pattern: g1, g2 or g3")
      ->required();
  turan_exact->add_option("--n", turan_n, "number of vertices")->required();
  turan_exact->callback([&] { run_turan_exact(turan_graph, turan_n); });

  std::string turan_family;
  int bound_n = 0;
  auto* turan_bound =
      turan->add_subcommand("bound", "closed-form upper bound");
  turan_bound->fallthrough();
  turan_bound
      ->add_option("--family", turan_family, "family: theta222 or girth8")
      ->required();
  turan_bound->add_option("--n", bound_n, "number of vertices")->required();
  turan_bound->callback([&] { run_turan_bound(turan_family, bound_n); });

  std::string search_graph;
  std::string search_family;
  int search_n = 0;
  int search_ceiling = kBruteForceCeiling;
  auto* turan_search =
      turan->add_subcommand("search", "brute-force extremal search");
  turan_search->fallthrough();
  turan_search->add_option("--graph", search_graph,
                           "pattern: g1, g2, g3 or theta222");
  turan_search->add_option("--family", search_family, "family: girth8");
  turan_search->add_option("--n", search_n, "number of vertices")->required();
  turan_search->add_option("--ceiling", search_ceiling, "order ceiling");
  turan_search->callback(
      [&] { run_turan_search(search_graph, search_family, search_n, search_ceiling); });

  // census -----------------------------------------------------------------
  int census_gamma = 3;
  int census_girth = 8;
  std::string census_a;
  std::string census_b;
  std::string census_criterion = "c4";
  int census_ceiling_opt = 0;
  std::string census_out;
  auto* census_cmd =
      app.add_subcommand("census", "exhaustive VN-graph census over (a, b)");
  census_cmd->fallthrough();
  census_cmd->add_option("--gamma", census_gamma, "variable degree");
  census_cmd->add_option("--tanner-girth", census_girth, "code girth: 6 or 8");
  census_cmd->add_option("--a", census_a, "size range lo:hi")->required();
  census_cmd->add_option("--b", census_b, "odd-check range lo:hi")->required();
  census_cmd->add_option("--criterion", census_criterion,
                         "split criterion: c4, g1, g2 or g3");
  census_cmd->add_option("--ceiling", census_ceiling_opt,
                         "override the size ceiling (0 = default)");
  census_cmd->add_option("--out", census_out, "write CSV to this path");
  census_cmd->callback([&] {
    run_census(census_gamma, census_girth, census_a, census_b,
               census_criterion, census_ceiling_opt, census_out);
  });

  // ets --------------------------------------------------------------------
  auto* ets = app.add_subcommand("ets", "trapping-set arithmetic and ranking");
  ets->require_subcommand(1);
  ets->fallthrough();

  std::string bound_regime;
  int ets_gamma = 0;
  int ets_a = 0;
  auto* ets_bound = ets->add_subcommand(
      "bound", "minimum odd-check count admissible at a given size");
  ets_bound->fallthrough();
  ets_bound
      ->add_option("--regime", bound_regime, "regime: girth8, t1, t2 or t3")
      ->required();
  ets_bound->add_option("--gamma", ets_gamma, "variable degree")->required();
  ets_bound->add_option("--a", ets_a, "trapping-set size")->required();
  ets_bound->callback([&] { run_ets_bound(bound_regime, ets_gamma, ets_a); });

  std::string min_regime;
  int min_gamma = 0;
  int min_b = 0;
  bool min_no_confirm = false;
  int min_max_a = 14;
  long long min_budget = 400'000'000;
  auto* ets_min = ets->add_subcommand(
      "min-size", "smallest trapping-set size for a given odd-check count");
  ets_min->fallthrough();
  ets_min->add_option("--regime", min_regime, "regime: girth8, t1, t2 or t3")
      ->required();
  ets_min->add_option("--gamma", min_gamma, "variable degree")->required();
  ets_min->add_option("--b", min_b, "odd-check count")->required();
  ets_min->add_flag("--no-confirm", min_no_confirm,
                    "skip the existence search, report arithmetic only");
  ets_min->add_option("--max-a", min_max_a, "existence scan ceiling");
  ets_min->add_option("--budget", min_budget, "search node budget");
  ets_min->callback([&] {
    run_ets_min_size(min_regime, min_gamma, min_b, min_no_confirm, min_max_a,
                     min_budget);
  });

  int spec_gamma = 0;
  int spec_a = 0;
  int spec_b = 0;
  int spec_girth = 8;
  int spec_limit = 0;
  auto* ets_spectrum = ets->add_subcommand(
      "spectrum", "rank the (a, b) classes by spectral radius");
  ets_spectrum->fallthrough();
  ets_spectrum->add_option("--gamma", spec_gamma, "variable degree")->required();
  ets_spectrum->add_option("--a", spec_a, "trapping-set size")->required();
  ets_spectrum->add_option("--b", spec_b, "odd-check count")->required();
  ets_spectrum->add_option("--tanner-girth", spec_girth, "code girth: 6 or 8");
  ets_spectrum->add_option("--limit", spec_limit,
                           "print only the top classes (0 = all)");
  ets_spectrum->callback(
      [&] { run_ets_spectrum(spec_gamma, spec_a, spec_b, spec_girth, spec_limit); });

  // qc ---------------------------------------------------------------------
  auto* qc = app.add_subcommand("qc", "exponent-matrix audits");
  qc->require_subcommand(1);
  qc->fallthrough();

  std::string qc_code;
  std::string qc_file;
  const auto add_code_options = [&](CLI::App* cmd) {
    cmd->fallthrough();
    cmd->add_option("--code", qc_code, "built-in code: C1 or C2");
    cmd->add_option("--file", qc_file, "exponent matrix file");
  };

  auto* qc_girth = qc->add_subcommand("girth", "girth of the lifted code");
  add_code_options(qc_girth);
  qc_girth->callback([&] { run_qc_girth(qc_code, qc_file); });

  auto* qc_cycles = qc->add_subcommand(
      "audit-8cycles", "census of 8-cycles and their shared pairs");
  add_code_options(qc_cycles);
  qc_cycles->callback([&] { run_qc_audit_8cycles(qc_code, qc_file); });

  auto* qc_t = qc->add_subcommand(
      "audit-T", "search for the chorded-cycle Tanner substructures");
  add_code_options(qc_t);
  qc_t->callback([&] { run_qc_audit_t(qc_code, qc_file); });

  int qc_max_a = 8;
  int qc_max_b = 4;
  long long qc_budget = 200'000'000;
  auto* qc_ets = qc->add_subcommand(
      "ets-search", "exhaustive small trapping-set search in the lifted code");
  add_code_options(qc_ets);
  qc_ets->add_option("--max-a", qc_max_a, "largest size to search");
  qc_ets->add_option("--max-b", qc_max_b, "largest odd-check count to keep");
  qc_ets->add_option("--budget", qc_budget, "search node budget");
  qc_ets->callback(
      [&] { run_qc_ets_search(qc_code, qc_file, qc_max_a, qc_max_b, qc_budget); });

  // sim --------------------------------------------------------------------
  std::string sim_code;
  std::string sim_alist;
  std::string sim_decoder = "sum-product";
  double sim_norm = 1.0;
  int sim_iters = 50;
  std::string sim_ebn0;
  std::uint64_t sim_seed = 42;
  long long sim_frames = 10'000'000;
  long long sim_errors = 200;
  bool sim_no_early = false;
  double sim_clip = 30.0;
  std::string sim_out = "fer.csv";
  std::string sim_plot;
  auto* sim = app.add_subcommand("sim", "AWGN frame-error-rate sweep");
  sim->fallthrough();
  sim->add_option("--code", sim_code, "built-in code: C1 or C2");
  sim->add_option("--alist", sim_alist, "parity-check matrix in alist format");
  sim->add_option("--decoder", sim_decoder,
                  "sum-product, min-sum or normalized-min-sum");
  sim->add_option("--norm", sim_norm, "normalized-min-sum scale");
  sim->add_option("--iters", sim_iters, "decoder iterations");
  sim->add_option("--ebn0", sim_ebn0, "sweep start:step:stop or list, dB")
      ->required();
  sim->add_option("--seed", sim_seed, "RNG seed");
  sim->add_option("--max-frames", sim_frames, "frame ceiling per point");
  sim->add_option("--max-errors", sim_errors, "frame-error target per point");
  sim->add_flag("--no-early-stop", sim_no_early,
                "always run the full iteration count");
  sim->add_option("--clip", sim_clip, "LLR clamp magnitude");
  sim->add_option("--out", sim_out, "FER CSV output path");
  sim->add_option("--plot", sim_plot, "also write a plot script here");
  sim->callback([&] {
    run_sim(sim_code, sim_alist, sim_decoder, sim_norm, sim_iters, sim_ebn0,
            sim_seed, sim_frames, sim_errors, sim_no_early, sim_clip, sim_out,
            sim_plot);
  });

  // reproduce ----------------------------------------------------------------
  std::string repro_target;
  bool repro_extended = false;
  std::string repro_golden = "data/golden";
  std::string repro_out;
  auto* repro = app.add_subcommand(
      "reproduce", "regenerate a reference table and diff it cell by cell");
  repro->fallthrough();
  repro
      ->add_option("target", repro_target,
                   "table1, table2, table3 or girth-claims")
      ->required();
  repro->add_flag("--extended", repro_extended,
                  "include the slower extended rows");
  repro->add_option("--golden-dir", repro_golden, "golden CSV directory");
  repro->add_option("--out", repro_out, "write the regenerated CSV here");
  repro->callback([&] {
    run_reproduce(repro_target, repro_extended, repro_golden, repro_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ResourceLimitError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return g_exit;
}
