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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "trapset/qc.hpp"
#include "trapset/sim.hpp"

namespace {

using trapset::BpDecoder;
using trapset::DecodeOutcome;
using trapset::DecoderConfig;
using trapset::DecoderVariant;
using trapset::SparseBinaryMatrix;
using trapset::StopRule;
using trapset::TannerGraph;

constexpr double kInf = std::numeric_limits<double>::infinity();

/** Builds a sparse matrix from explicit rows of column indices. */
SparseBinaryMatrix sparse(int rows, int cols,
                          std::vector<std::vector<int>> row_support) {
  SparseBinaryMatrix h;
  h.rows = rows;
  h.cols = cols;
  h.row_support = std::move(row_support);
  h.col_support.resize(cols);
  for (int r = 0; r < rows; ++r) {
    for (int c : h.row_support[r]) {
      h.col_support[c].push_back(r);
    }
  }
  return h;
}

/** Chain of n-1 degree-2 checks: the length-n repetition code. */
SparseBinaryMatrix repetition(int n) {
  std::vector<std::vector<int>> rows;
  for (int v = 0; v + 1 < n; ++v) {
    rows.push_back({v, v + 1});
  }
  return sparse(n - 1, n, std::move(rows));
}

/** Syndrome re-check written against the matrix, not the decoder. */
bool zero_syndrome(const SparseBinaryMatrix& h,
                   const std::vector<std::uint8_t>& bits) {
  for (const auto& support : h.row_support) {
    int parity = 0;
    for (int c : support) {
      parity ^= bits[c];
    }
    if (parity != 0) {
      return false;
    }
  }
  return true;
}

DecoderConfig config(DecoderVariant variant, int iters = 50) {
  DecoderConfig cfg;
  cfg.variant = variant;
  cfg.max_iterations = iters;
  return cfg;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("decoder configuration validation") {
  DecoderConfig cfg;
  CHECK_NOTHROW(cfg.validate());

  cfg.max_iterations = 0;
  CHECK_THROWS_AS(cfg.validate(), trapset::Error);
  cfg.max_iterations = 1;

  cfg.normalization = 0.0;
  CHECK_THROWS_AS(cfg.validate(), trapset::Error);
  cfg.normalization = 1.25;
  CHECK_THROWS_AS(cfg.validate(), trapset::Error);
  cfg.normalization = 0.75;
  CHECK_NOTHROW(cfg.validate());

  cfg.llr_clip = 0.0;
  CHECK_THROWS_AS(cfg.validate(), trapset::Error);
  cfg.llr_clip = kInf;
  CHECK_THROWS_AS(cfg.validate(), trapset::Error);
}

TEST_CASE("counter-based gaussian stream: determinism and calibration") {
  // Same key, same value; call order is irrelevant by construction.
  const double a = trapset::gaussian_sample(42, 7, 3);
  const double b = trapset::gaussian_sample(42, 7, 3);
  CHECK(a == b);
  CHECK(trapset::gaussian_sample(42, 7, 4) != a);
  CHECK(trapset::gaussian_sample(42, 8, 3) != a);
  CHECK(trapset::gaussian_sample(43, 7, 3) != a);

  // One million samples: mean near 0, variance within 1% of 1.
  const long long samples = 1'000'000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (long long frame = 0; frame < 1000; ++frame) {
    for (int index = 0; index < 1000; ++index) {
      const double z = trapset::gaussian_sample(20260815, frame, index);
      sum += z;
      sum_sq += z * z;
    }
  }
  const double mean = sum / samples;
  const double variance = sum_sq / samples - mean * mean;
  CHECK(std::fabs(mean) < 0.005);
  CHECK(variance == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("hand-checked decodes on a single parity check") {
  // H = [1 1]: the even-weight code on two bits.
  const auto pair_code = sparse(1, 2, {{0, 1}});
  const BpDecoder decoder(trapset::tanner(pair_code));

  // Clean channel word: accepted with zero iterations.
  for (auto variant : {DecoderVariant::sum_product, DecoderVariant::min_sum,
                       DecoderVariant::normalized_min_sum}) {
    const auto out = decoder.decode({5.0, 1.0}, config(variant));
    CHECK(out.converged);
    CHECK(out.iterations == 0);
    CHECK(out.bits == std::vector<std::uint8_t>{0, 0});
  }

  // (-5, +1): one round flips both bits to the codeword 11 under every
  // variant (a degree-2 check forwards the other message unchanged).
  for (auto variant : {DecoderVariant::sum_product, DecoderVariant::min_sum,
                       DecoderVariant::normalized_min_sum}) {
    auto cfg = config(variant);
    cfg.normalization = 0.8;
    const auto out = decoder.decode({-5.0, 1.0}, cfg);
    CHECK(out.converged);
    CHECK(out.iterations == 1);
    CHECK(out.bits == std::vector<std::uint8_t>{1, 1});
  }

  // H = [1 1 1]: min-sum messages are exact integers here.
  const auto triple = sparse(1, 3, {{0, 1, 2}});
  const BpDecoder triple_decoder(trapset::tanner(triple));
  {
    // Messages +3, -2, -2 land on posteriors (1, 1, 2) -> all zero.
    const auto out =
        triple_decoder.decode({-2.0, 3.0, 4.0}, config(DecoderVariant::min_sum));
    CHECK(out.converged);
    CHECK(out.iterations == 1);
    CHECK(out.bits == std::vector<std::uint8_t>{0, 0, 0});
  }
  {
    // Posteriors (-2, -1, 1): converges to the even-weight word 110.
    const auto out =
        triple_decoder.decode({-5.0, 3.0, 4.0}, config(DecoderVariant::min_sum));
    CHECK(out.converged);
    CHECK(out.iterations == 1);
    CHECK(out.bits == std::vector<std::uint8_t>{1, 1, 0});
  }

  // LLR length mismatch is rejected.
  CHECK_THROWS_AS(decoder.decode({1.0}, config(DecoderVariant::sum_product)),
                  trapset::Error);
}

TEST_CASE("belief propagation is exact on the repetition-code tree") {
  // The Tanner graph of the repetition code is a tree, where both
  // sum-product (marginals) and min-sum (block MAP) reduce to the sign
  // of the summed LLRs.  Ample iterations guarantee convergence of the
  // message schedule across the diameter.
  const int n = 5;
  const auto code = repetition(n);
  const BpDecoder decoder(trapset::tanner(code));
  std::mt19937 rng(20260815);
  std::uniform_real_distribution<double> llr_dist(-4.0, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> llr(n);
    double total = 0.0;
    for (double& value : llr) {
      value = llr_dist(rng);
      total += value;
    }
    const std::uint8_t expected = total < 0.0 ? 1 : 0;
    for (auto variant :
         {DecoderVariant::sum_product, DecoderVariant::min_sum}) {
      const auto out = decoder.decode(llr, config(variant, 20));
      CAPTURE(trial);
      REQUIRE(out.converged);
      for (std::uint8_t bit : out.bits) {
        CHECK(bit == expected);
      }
    }
  }
}

TEST_CASE("converged decodes satisfy the parity-check matrix") {
  // Low-SNR frames on the girth-6 code: whatever the decoder reports
  // as converged must really be a codeword of the lifted matrix.
  const auto h = trapset::lift(trapset::builtin_code("C1"));
  const BpDecoder decoder(trapset::tanner(h));
  const double rate = 0.5;
  const double ebn0 = std::pow(10.0, 2.0 / 10.0);  // 2 dB
  const double sigma = std::sqrt(1.0 / (2.0 * rate * ebn0));
  const auto cfg = config(DecoderVariant::sum_product, 30);
  int converged = 0;
  for (int frame = 0; frame < 200; ++frame) {
    std::vector<double> llr(h.cols);
    for (int i = 0; i < h.cols; ++i) {
      const double y = 1.0 + sigma * trapset::gaussian_sample(5, frame, i);
      llr[i] = 2.0 * y / (sigma * sigma);
    }
    const auto out = decoder.decode(llr, cfg);
    if (out.converged) {
      ++converged;
      CHECK(zero_syndrome(h, out.bits));
    } else {
      CHECK(!zero_syndrome(h, out.bits));
    }
  }
  // At 2 dB some but not all frames decode; both branches are exercised.
  CHECK(converged > 0);
  CHECK(converged < 200);
}

TEST_CASE("sum-product and min-sum agree at high SNR") {
  const auto h = trapset::lift(trapset::builtin_code("C1"));
  const BpDecoder decoder(trapset::tanner(h));
  const double rate = 0.5;
  const double ebn0 = std::pow(10.0, 6.0 / 10.0);  // 6 dB
  const double sigma = std::sqrt(1.0 / (2.0 * rate * ebn0));
  int agree = 0;
  const int frames = 400;
  for (int frame = 0; frame < frames; ++frame) {
    std::vector<double> llr(h.cols);
    for (int i = 0; i < h.cols; ++i) {
      const double y = 1.0 + sigma * trapset::gaussian_sample(11, frame, i);
      llr[i] = 2.0 * y / (sigma * sigma);
    }
    const auto sp = decoder.decode(llr, config(DecoderVariant::sum_product));
    const auto ms = decoder.decode(llr, config(DecoderVariant::min_sum));
    agree += sp.bits == ms.bits ? 1 : 0;
  }
  CHECK(agree >= (frames * 99) / 100);
}

TEST_CASE("simulate: validation, noiseless channel, and reported rank") {
  const auto c1 = trapset::builtin_code("C1");
  const auto cfg = config(DecoderVariant::sum_product);
  const StopRule quick{2048, 5};

  CHECK_THROWS_AS(trapset::simulate(c1, cfg, {}, quick, 1), trapset::Error);
  CHECK_THROWS_AS(
      trapset::simulate(c1, cfg, {std::nan("")}, quick, 1), trapset::Error);
  CHECK_THROWS_AS(trapset::simulate(c1, cfg, {-kInf}, quick, 1),
                  trapset::Error);
  CHECK_THROWS_AS(trapset::simulate(c1, cfg, {2.0}, quick, 1, 0),
                  trapset::Error);
  CHECK_THROWS_AS(trapset::simulate(c1, cfg, {2.0}, StopRule{0, 5}, 1),
                  trapset::Error);
  // Rate (cols - rows) / cols must be positive.
  CHECK_THROWS_AS(trapset::simulate(sparse(2, 2, {{0, 1}, {0, 1}}), cfg,
                                    {2.0}, quick, 1),
                  trapset::Error);

  // The noiseless flag sends exact BPSK symbols: zero errors, zero
  // iterations, and the frame budget is exhausted.
  const auto result = trapset::simulate(c1, cfg, {kInf}, quick, 99, 1, "C1");
  CHECK(result.code == "C1");
  CHECK(result.seed == 99);
  CHECK(result.variables == 280);
  CHECK(result.checks == 140);
  CHECK(result.rank == 137);
  CHECK(result.rate == doctest::Approx(0.5));
  REQUIRE(result.points.size() == 1);
  CHECK(result.points[0].frames_sent == 2048);
  CHECK(result.points[0].frame_errors == 0);
  CHECK(result.points[0].bit_errors == 0);
  CHECK(result.points[0].avg_iterations == 0.0);
}

TEST_CASE("simulate: seed determinism and worker-count invariance") {
  const auto c1 = trapset::builtin_code("C1");
  const auto cfg = config(DecoderVariant::min_sum, 20);
  const StopRule stop{1024, 100};
  const std::vector<double> sweep{2.0};

  const auto reference = trapset::simulate(c1, cfg, sweep, stop, 7, 1);
  REQUIRE(reference.points.size() == 1);
  // The point is statistically busy: some errors, some successes.
  CHECK(reference.points[0].frame_errors > 0);
  CHECK(reference.points[0].frame_errors < reference.points[0].frames_sent);

  for (int threads : {1, 2, 8}) {
    const auto again = trapset::simulate(c1, cfg, sweep, stop, 7, threads);
    REQUIRE(again.points.size() == 1);
    CHECK(again.points[0].frames_sent == reference.points[0].frames_sent);
    CHECK(again.points[0].frame_errors == reference.points[0].frame_errors);
    CHECK(again.points[0].bit_errors == reference.points[0].bit_errors);
    CHECK(again.points[0].avg_iterations ==
          reference.points[0].avg_iterations);
  }

  // A different seed gives a different channel.
  const auto other = trapset::simulate(c1, cfg, sweep, stop, 8, 1);
  CHECK(other.points[0].bit_errors != reference.points[0].bit_errors);
}

TEST_CASE("simulate: FER decreases across an SNR sweep") {
  // Three waterfall-region points with at least 100 errors each; the
  // gaps are wide enough that strict monotonicity holds with margin far
  // beyond binomial noise.
  const auto c1 = trapset::builtin_code("C1");
  const auto cfg = config(DecoderVariant::sum_product, 30);
  const StopRule stop{200'000, 120};
  const auto result =
      trapset::simulate(c1, cfg, {1.0, 2.0, 3.0}, stop, 20260815, 1, "C1");
  REQUIRE(result.points.size() == 3);
  double previous = 1.0;
  for (const auto& point : result.points) {
    CHECK(point.frame_errors >= 100);
    const double fer =
        static_cast<double>(point.frame_errors) / point.frames_sent;
    CHECK(fer < previous);
    previous = fer;
  }
}

TEST_CASE("CSV and plot-script emission") {
  const auto c1 = trapset::builtin_code("C1");
  const auto cfg = config(DecoderVariant::normalized_min_sum, 10);
  const StopRule tiny{256, 50};
  const auto result =
      trapset::simulate(c1, cfg, {kInf, 4.0, 0.0}, tiny, 3, 1, "C1");
  REQUIRE(result.points.size() == 3);

  const auto dir = std::filesystem::temp_directory_path();
  const auto csv_path = dir / "trapset_sim_test.csv";
  trapset::emit_fer_csv(result, csv_path);
  std::ifstream in(csv_path);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "ebn0_db,frames,frame_errors,fer,avg_iters");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    REQUIRE(!line.empty());
    // fer must equal frame_errors / frames exactly after a round trip.
    // std::stod also accepts the "inf" spelling of the noiseless point.
    std::vector<std::string> fields;
    std::istringstream splitter(line);
    std::string field;
    while (std::getline(splitter, field, ',')) {
      fields.push_back(field);
    }
    REQUIRE(fields.size() == 5);
    const auto& point = result.points[rows];
    CHECK(std::stod(fields[0]) == point.ebn0_db);
    CHECK(std::stoll(fields[1]) == point.frames_sent);
    CHECK(std::stoll(fields[2]) == point.frame_errors);
    CHECK(std::stod(fields[3]) ==
          static_cast<double>(point.frame_errors) / point.frames_sent);
    CHECK(std::stod(fields[4]) == point.avg_iterations);
    ++rows;
  }
  CHECK(rows == 3);

  const auto script_path = dir / "trapset_sim_test_plot.py";
  trapset::emit_plot_script(result, script_path);
  const std::string script = slurp(script_path);
  CHECK(script.find("semilogy") != std::string::npos);
  CHECK(script.find("sys.argv[1]") != std::string::npos);
  CHECK(script.find("C1.csv") != std::string::npos);
  CHECK(script.find("normalized min-sum") != std::string::npos);
  // Emission is deterministic.
  trapset::emit_plot_script(result, script_path);
  CHECK(slurp(script_path) == script);

  const trapset::SimResult empty;
  CHECK_THROWS_AS(trapset::emit_fer_csv(empty, csv_path), trapset::Error);
  CHECK_THROWS_AS(trapset::emit_plot_script(empty, script_path),
                  trapset::Error);
  std::filesystem::remove(csv_path);
  std::filesystem::remove(script_path);
}
