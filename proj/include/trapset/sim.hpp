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
 * @file sim.hpp
 * BPSK/AWGN Monte-Carlo harness with flooding belief-propagation
 * decoding (sum-product, min-sum, normalized min-sum) producing
 * frame-error-rate sweeps.
 *
 * Reproducibility. All noise comes from a counter-based generator keyed
 * by (seed, frame, sample), so a frame's channel realization depends
 * only on the seed and its global frame index.  Frames are processed in
 * batches of kFrameBatch; the stop rule is evaluated at batch
 * boundaries on a frame-ordered tally.  Together these make results
 * bit-identical for any worker count.
 *
 * The transmitted codeword is always the all-zero word (exact for
 * linear codes over symmetric channels), mapped to +1 by BPSK; the
 * noise variance for a point is sigma^2 = 1 / (2 * R * Eb/N0) with the
 * nominal rate R = (eta - gamma) / eta.
 */

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "trapset/qc.hpp"

namespace trapset {

/** Message-combining rule used at the check nodes. */
enum class DecoderVariant {
  sum_product,
  min_sum,
  normalized_min_sum,
};

/** Flooding-decoder knobs. */
struct DecoderConfig {
  DecoderVariant variant = DecoderVariant::sum_product;
  /** Scale on check messages; used by normalized_min_sum only. */
  double normalization = 1.0;
  int max_iterations = 50;
  /** Stop a frame as soon as the hard decision satisfies all checks. */
  bool early_stop = true;
  /** Channel LLRs and messages are clamped to [-llr_clip, llr_clip]. */
  double llr_clip = 30.0;

  /**
   * Throws Error unless max_iterations >= 1, normalization is in
   * (0, 1], and llr_clip is positive and finite.
   */
  void validate() const;
};

/** Hard-decision outcome of decoding one frame. */
struct DecodeOutcome {
  /** One bit per variable node. */
  std::vector<std::uint8_t> bits;
  /** Message-passing rounds run; 0 if the channel word already parsed. */
  int iterations = 0;
  /** True when every parity check is satisfied by `bits`. */
  bool converged = false;
};

/**
 * Flooding belief propagation on a fixed Tanner graph.  Construction
 * precomputes the edge structure; decode() is const and allocates only
 * per-call message buffers, so one decoder may be shared across
 * threads.
 */
class BpDecoder {
 public:
  explicit BpDecoder(const TannerGraph& graph);

  /**
   * Runs cfg.max_iterations rounds of check/variable updates on the
   * channel LLRs (positive = bit 0 more likely), stopping early on a
   * zero syndrome when cfg.early_stop is set.  llr.size() must equal
   * the variable count (Error otherwise).
   */
  DecodeOutcome decode(const std::vector<double>& llr,
                       const DecoderConfig& cfg) const;

  int variables() const { return variables_; }
  int checks() const { return static_cast<int>(check_edges_.size()); }

 private:
  int variables_ = 0;
  /** Edge ids incident to each check; edge_var_[e] is the variable. */
  std::vector<std::vector<int>> check_edges_;
  std::vector<std::vector<int>> var_edges_;
  std::vector<int> edge_var_;
};

/**
 * Unit-variance Gaussian deviate produced by a splitmix-style hash of
 * (seed, frame, index) fed through the Box-Muller transform.  The same
 * key always yields the same value, independent of call order.
 */
double gaussian_sample(std::uint64_t seed, std::uint64_t frame,
                       std::uint64_t index);

/** Per-point stop rule: whichever limit is reached first ends a point. */
struct StopRule {
  long long max_frames = 10'000'000;
  long long max_frame_errors = 200;
};

/** Tallies for one Eb/N0 point. */
struct PointResult {
  double ebn0_db = 0.0;
  long long frames_sent = 0;
  long long frame_errors = 0;
  long long bit_errors = 0;
  /** Mean message-passing rounds per frame. */
  double avg_iterations = 0.0;
};

/** A full sweep, with enough context to reproduce it. */
struct SimResult {
  std::string code;
  DecoderConfig config;
  std::uint64_t seed = 0;
  int variables = 0;
  int checks = 0;
  /** GF(2) rank of the parity-check matrix actually simulated. */
  int rank = 0;
  /** Nominal rate (eta - gamma) / eta used for the noise variance. */
  double rate = 0.0;
  std::vector<PointResult> points;
};

/** Frames per scheduling batch; the stop rule fires at batch edges. */
inline constexpr int kFrameBatch = 1024;

/**
 * Monte-Carlo FER sweep over ebn0_db for the code given by a
 * parity-check matrix.  An entry of +infinity simulates the noiseless
 * channel.  The transmitted frame is all-zero; a frame counts as an
 * error when the decoder's hard decision is not the all-zero word
 * (non-convergence included).  Throws Error for an empty or NaN sweep
 * list, a rate of zero (gamma >= eta), or threads < 1.
 */
SimResult simulate(const SparseBinaryMatrix& h, const DecoderConfig& cfg,
                   const std::vector<double>& ebn0_db, const StopRule& stop,
                   std::uint64_t seed, int threads = 1,
                   const std::string& code_id = "");

/** Lifts the exponent matrix and simulates it; requires girth >= 4. */
SimResult simulate(const ExponentMatrix& code, const DecoderConfig& cfg,
                   const std::vector<double>& ebn0_db, const StopRule& stop,
                   std::uint64_t seed, int threads = 1,
                   const std::string& code_id = "");

/**
 * Writes `ebn0_db,frames,frame_errors,fer,avg_iters` rows, one per
 * point, with fer = frame_errors / frames at full double precision.
 * The result must contain at least one point (Error otherwise).
 */
void emit_fer_csv(const SimResult& result, const std::filesystem::path& path);

/**
 * Writes a self-contained Python script that reads the CSV produced by
 * emit_fer_csv (path given as argv[1], defaulting to the result's code
 * id + ".csv") and renders FER versus Eb/N0 with a log-scale y axis.
 */
void emit_plot_script(const SimResult& result,
                      const std::filesystem::path& path);

}  // namespace trapset
