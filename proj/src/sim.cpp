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

#include "trapset/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <thread>

#include "trapset/graph.hpp"

namespace trapset {

void DecoderConfig::validate() const {
  if (max_iterations < 1) {
    throw Error("sim: max_iterations must be at least 1");
  }
  if (!(normalization > 0.0) || normalization > 1.0) {
    throw Error("sim: normalization factor must lie in (0, 1]");
  }
  if (!(llr_clip > 0.0) || !std::isfinite(llr_clip)) {
    throw Error("sim: llr_clip must be positive and finite");
  }
}

BpDecoder::BpDecoder(const TannerGraph& graph) : variables_(graph.variables) {
  check_edges_.resize(graph.checks);
  var_edges_.resize(graph.variables);
  for (int check = 0; check < graph.checks; ++check) {
    for (int var : graph.check_neighbors[check]) {
      const int edge = static_cast<int>(edge_var_.size());
      edge_var_.push_back(var);
      check_edges_[check].push_back(edge);
      var_edges_[var].push_back(edge);
    }
  }
}

DecodeOutcome BpDecoder::decode(const std::vector<double>& llr,
                                const DecoderConfig& cfg) const {
  cfg.validate();
  if (static_cast<int>(llr.size()) != variables_) {
    throw Error("sim: LLR vector length does not match the variable count");
  }
  const auto clamp = [&](double x) {
    return std::clamp(x, -cfg.llr_clip, cfg.llr_clip);
  };
  const int edges = static_cast<int>(edge_var_.size());
  std::vector<double> var_to_check(edges);
  std::vector<double> check_to_var(edges, 0.0);
  std::vector<double> posterior(variables_);
  for (int var = 0; var < variables_; ++var) {
    posterior[var] = clamp(llr[var]);
    for (int edge : var_edges_[var]) {
      var_to_check[edge] = posterior[var];
    }
  }

  DecodeOutcome out;
  out.bits.resize(variables_);
  const auto decide = [&]() {
    for (int var = 0; var < variables_; ++var) {
      out.bits[var] = posterior[var] < 0.0 ? 1 : 0;
    }
  };
  const auto syndrome_ok = [&]() {
    for (const auto& incident : check_edges_) {
      int parity = 0;
      for (int edge : incident) {
        parity ^= out.bits[edge_var_[edge]];
      }
      if (parity != 0) {
        return false;
      }
    }
    return true;
  };

  decide();
  if (cfg.early_stop && syndrome_ok()) {
    out.converged = true;
    return out;
  }

  std::size_t max_degree = 0;
  for (const auto& incident : check_edges_) {
    max_degree = std::max(max_degree, incident.size());
  }
  std::vector<double> prefix(max_degree + 1);
  std::vector<double> suffix(max_degree + 1);

  for (int iteration = 1; iteration <= cfg.max_iterations; ++iteration) {
    for (const auto& incident : check_edges_) {
      const int degree = static_cast<int>(incident.size());
      if (degree == 0) {
        continue;
      }
      if (cfg.variant == DecoderVariant::sum_product) {
        // Prefix/suffix products of tanh(m/2) avoid dividing by a
        // near-zero term; clamping keeps every factor strictly inside
        // (-1, 1), so atanh stays finite.
        prefix[0] = 1.0;
        suffix[degree] = 1.0;
        for (int t = 0; t < degree; ++t) {
          prefix[t + 1] =
              prefix[t] * std::tanh(0.5 * var_to_check[incident[t]]);
        }
        for (int t = degree - 1; t >= 0; --t) {
          suffix[t] =
              suffix[t + 1] * std::tanh(0.5 * var_to_check[incident[t]]);
        }
        for (int t = 0; t < degree; ++t) {
          check_to_var[incident[t]] =
              clamp(2.0 * std::atanh(prefix[t] * suffix[t + 1]));
        }
      } else {
        const double scale = cfg.variant == DecoderVariant::min_sum
                                 ? 1.0
                                 : cfg.normalization;
        double min1 = std::numeric_limits<double>::infinity();
        double min2 = min1;
        int min_at = -1;
        int sign = 1;
        for (int t = 0; t < degree; ++t) {
          const double m = var_to_check[incident[t]];
          if (m < 0.0) {
            sign = -sign;
          }
          const double mag = std::fabs(m);
          if (mag < min1) {
            min2 = min1;
            min1 = mag;
            min_at = t;
          } else if (mag < min2) {
            min2 = mag;
          }
        }
        for (int t = 0; t < degree; ++t) {
          const double m = var_to_check[incident[t]];
          const double mag = t == min_at ? min2 : min1;
          const int out_sign = m < 0.0 ? -sign : sign;
          check_to_var[incident[t]] = clamp(scale * out_sign * mag);
        }
      }
    }

    for (int var = 0; var < variables_; ++var) {
      double total = clamp(llr[var]);
      for (int edge : var_edges_[var]) {
        total += check_to_var[edge];
      }
      posterior[var] = total;
      for (int edge : var_edges_[var]) {
        var_to_check[edge] = clamp(total - check_to_var[edge]);
      }
    }

    out.iterations = iteration;
    decide();
    if (cfg.early_stop && syndrome_ok()) {
      out.converged = true;
      return out;
    }
  }

  out.converged = syndrome_ok();
  return out;
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t counter_key(std::uint64_t seed, std::uint64_t frame,
                          std::uint64_t index) {
  return mix64(mix64(mix64(seed) ^ frame) ^ index);
}

/** Top 53 bits as a double in [0, 1). */
double to_unit(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

constexpr double kTau = 6.283185307179586476925286766559;

}  // namespace

double gaussian_sample(std::uint64_t seed, std::uint64_t frame,
                       std::uint64_t index) {
  const double u1 = 1.0 - to_unit(counter_key(seed, frame, 2 * index));
  const double u2 = to_unit(counter_key(seed, frame, 2 * index + 1));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTau * u2);
}

namespace {

struct BatchTally {
  long long frame_errors = 0;
  long long bit_errors = 0;
  long long iterations = 0;
};

}  // namespace

SimResult simulate(const SparseBinaryMatrix& h, const DecoderConfig& cfg,
                   const std::vector<double>& ebn0_db, const StopRule& stop,
                   std::uint64_t seed, int threads,
                   const std::string& code_id) {
  cfg.validate();
  if (ebn0_db.empty()) {
    throw Error("sim: the Eb/N0 sweep needs at least one point");
  }
  for (double db : ebn0_db) {
    if (std::isnan(db) || (std::isinf(db) && db < 0.0)) {
      throw Error("sim: Eb/N0 points must be finite or +infinity");
    }
  }
  if (stop.max_frames < 1 || stop.max_frame_errors < 1) {
    throw Error("sim: stop-rule limits must be positive");
  }
  if (threads < 1) {
    throw Error("sim: thread count must be at least 1");
  }
  if (h.rows >= h.cols) {
    throw Error("sim: nominal rate (cols - rows) / cols must be positive");
  }

  const TannerGraph graph = tanner(h);
  const BpDecoder decoder(graph);
  const int n = graph.variables;

  SimResult result;
  result.code = code_id;
  result.config = cfg;
  result.seed = seed;
  result.variables = h.cols;
  result.checks = h.rows;
  result.rank = gf2_rank(h);
  result.rate = static_cast<double>(h.cols - h.rows) / h.cols;
  result.points.reserve(ebn0_db.size());

  for (std::size_t point = 0; point < ebn0_db.size(); ++point) {
    const double db = ebn0_db[point];
    const bool noiseless = std::isinf(db);
    double sigma = 0.0;
    if (!noiseless) {
      const double linear = std::pow(10.0, db / 10.0);
      sigma = std::sqrt(1.0 / (2.0 * result.rate * linear));
    }

    // A frame's channel noise is keyed by (seed, point || frame index),
    // so tallies are identical however frames are spread over threads.
    const std::uint64_t frame_base = static_cast<std::uint64_t>(point) << 40;
    const auto run_frame = [&](long long frame, BatchTally& tally) {
      const std::uint64_t key = frame_base | static_cast<std::uint64_t>(frame);
      std::vector<double> llr(n);
      if (noiseless) {
        std::fill(llr.begin(), llr.end(), cfg.llr_clip);
      } else {
        const double gain = 2.0 / (sigma * sigma);
        for (int i = 0; i < n; ++i) {
          const double y = 1.0 + sigma * gaussian_sample(seed, key, i);
          llr[i] = gain * y;
        }
      }
      const DecodeOutcome out = decoder.decode(llr, cfg);
      long long wrong = 0;
      for (std::uint8_t bit : out.bits) {
        wrong += bit;
      }
      tally.iterations += out.iterations;
      if (wrong > 0) {
        tally.frame_errors += 1;
        tally.bit_errors += wrong;
      }
    };

    PointResult tallied;
    tallied.ebn0_db = db;
    long long iteration_sum = 0;
    while (tallied.frames_sent < stop.max_frames &&
           tallied.frame_errors < stop.max_frame_errors) {
      const long long batch = std::min<long long>(
          kFrameBatch, stop.max_frames - tallied.frames_sent);
      const long long first = tallied.frames_sent;
      BatchTally total;
      if (threads == 1) {
        for (long long f = first; f < first + batch; ++f) {
          run_frame(f, total);
        }
      } else {
        std::vector<BatchTally> parts(threads);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w) {
          pool.emplace_back([&, w]() {
            for (long long f = first + w; f < first + batch; f += threads) {
              run_frame(f, parts[w]);
            }
          });
        }
        for (auto& worker : pool) {
          worker.join();
        }
        for (const BatchTally& part : parts) {
          total.frame_errors += part.frame_errors;
          total.bit_errors += part.bit_errors;
          total.iterations += part.iterations;
        }
      }
      tallied.frames_sent += batch;
      tallied.frame_errors += total.frame_errors;
      tallied.bit_errors += total.bit_errors;
      iteration_sum += total.iterations;
    }
    tallied.avg_iterations =
        tallied.frames_sent > 0
            ? static_cast<double>(iteration_sum) / tallied.frames_sent
            : 0.0;
    result.points.push_back(tallied);
  }
  return result;
}

SimResult simulate(const ExponentMatrix& code, const DecoderConfig& cfg,
                   const std::vector<double>& ebn0_db, const StopRule& stop,
                   std::uint64_t seed, int threads,
                   const std::string& code_id) {
  code.validate();
  if (girth_qc(code) < 4) {
    throw Error("sim: the code must have girth at least 4");
  }
  return simulate(lift(code), cfg, ebn0_db, stop, seed, threads, code_id);
}

void emit_fer_csv(const SimResult& result,
                  const std::filesystem::path& path) {
  if (result.points.empty()) {
    throw Error("sim: cannot emit a CSV for an empty sweep");
  }
  std::ofstream out(path);
  if (!out) {
    throw Error("sim: cannot open " + path.string() + " for writing");
  }
  out << "ebn0_db,frames,frame_errors,fer,avg_iters\n";
  for (const PointResult& point : result.points) {
    const double fer =
        static_cast<double>(point.frame_errors) / point.frames_sent;
    char row[160];
    std::snprintf(row, sizeof row, "%.17g,%lld,%lld,%.17g,%.17g\n",
                  point.ebn0_db, point.frames_sent, point.frame_errors, fer,
                  point.avg_iterations);
    out << row;
  }
  out.flush();
  if (!out) {
    throw Error("sim: failed writing " + path.string());
  }
}

void emit_plot_script(const SimResult& result,
                      const std::filesystem::path& path) {
  if (result.points.empty()) {
    throw Error("sim: cannot emit a plot script for an empty sweep");
  }
  const char* variant = "sum-product";
  if (result.config.variant == DecoderVariant::min_sum) {
    variant = "min-sum";
  } else if (result.config.variant == DecoderVariant::normalized_min_sum) {
    variant = "normalized min-sum";
  }
  std::string label = result.code.empty() ? std::string("code") : result.code;
  std::ofstream out(path);
  if (!out) {
    throw Error("sim: cannot open " + path.string() + " for writing");
  }
  out << "#!/usr/bin/env python3\n"
      << "\"\"\"Plot an FER sweep produced by emit_fer_csv (log-scale y).\"\"\"\n"
      << "import csv\n"
      << "import sys\n"
      << "\n"
      << "import matplotlib\n"
      << "matplotlib.use(\"Agg\")\n"
      << "import matplotlib.pyplot as plt\n"
      << "\n"
      << "path = sys.argv[1] if len(sys.argv) > 1 else \"" << label
      << ".csv\"\n"
      << "ebn0, fer = [], []\n"
      << "with open(path, newline=\"\") as handle:\n"
      << "    for row in csv.DictReader(handle):\n"
      << "        ebn0.append(float(row[\"ebn0_db\"]))\n"
      << "        fer.append(float(row[\"fer\"]))\n"
      << "fig, ax = plt.subplots()\n"
      << "ax.semilogy(ebn0, fer, marker=\"o\")\n"
      << "ax.set_xlabel(\"Eb/N0 (dB)\")\n"
      << "ax.set_ylabel(\"FER\")\n"
      << "ax.set_title(\"" << label << " (" << variant << ")\")\n"
      << "ax.grid(True, which=\"both\", alpha=0.4)\n"
      << "fig.savefig(path.rsplit(\".\", 1)[0] + \".png\", dpi=160)\n";
  out.flush();
  if (!out) {
    throw Error("sim: failed writing " + path.string());
  }
}

}  // namespace trapset
