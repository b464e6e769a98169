// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include <cmath>
#include <vector>

#include <doctest.h>

#include "dma/errors.hpp"
#include "dma/holography.hpp"
#include "dma/rng.hpp"
#include "goldens.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dma;
using dma::test::close_rel;

namespace {

const HologramCode kAlternating = HologramCode::from_string("1010101010101010");

double locked_angle(const ApertureConfig& c, double f, double offset) {
  const double w = kTwoPi * f;
  const double beta = guided_wavenumber(c.feed, w).real();
  return rad_to_deg(std::asin((beta - offset) / (w / kSpeedOfLight)));
}

double db(double ratio) { return 20.0 * std::log10(ratio); }

}  // namespace

TEST_CASE("synthesis: phase-locked target gives all ones") {
  const ApertureConfig c;
  const double theta = locked_angle(c, 50e9, 0.0);
  CHECK(synthesize_code(c, {theta, 50e9}).to_string() == "1111111111111111");
}

TEST_CASE("synthesis: half-period offset gives the alternating code") {
  const ApertureConfig c;
  const double theta = locked_angle(c, 60e9, kPi / c.spacing);
  CHECK(synthesize_code(c, {theta, 60e9}) == kAlternating);
}

TEST_CASE("synthesis goldens at 60 GHz") {
  const ApertureConfig c;
  CHECK(synthesize_code(c, {-30.0, 60e9}).to_string() == golden::kSynthesizedMinus30);
  CHECK(synthesize_code(c, {0.0, 60e9}).to_string() == golden::kSynthesizedZero);
  const HologramCode plus = synthesize_code(c, {30.0, 60e9});
  CHECK(plus.to_string() == golden::kSynthesizedPlus30);
  const BeamMetrics m = beam_metrics(code_pattern(c, plus, 60e9));
  CHECK(std::abs(m.peak_angle - 30.0) <= m.hpbw / 2.0);
}

TEST_CASE("synthesis and search refuse invalid targets") {
  const ApertureConfig c;
  CHECK_THROWS_AS(synthesize_code(c, {90.0, 60e9}), DomainError);
  CHECK_THROWS_AS(synthesize_code(c, {-95.0, 60e9}), DomainError);
  CHECK_THROWS_WITH(synthesize_code(c, {0.0, 40e9}), doctest::Contains("below cutoff"));
  CHECK_THROWS_AS(exhaustive_best_code(c, {90.0, 60e9}), DomainError);
}

TEST_CASE("exhaustive search on tiny apertures") {
  const ApertureConfig one = ApertureConfig::uniform(1, 2e-3);
  CHECK(exhaustive_best_code(one, {10.0, 60e9}).code.to_string() == "1");
  const ApertureConfig two = ApertureConfig::uniform(2, 2e-3);
  const double theta = locked_angle(two, 50e9, 0.0);
  CHECK(exhaustive_best_code(two, {theta, 50e9}).code.to_string() == "11");
}

TEST_CASE("exhaustive search refuses large apertures") {
  const ApertureConfig big = ApertureConfig::uniform(25, 2e-3);
  CHECK_THROWS_WITH(exhaustive_best_code(big, {0.0, 60e9}), doctest::Contains("refused"));
}

TEST_CASE("exhaustive optimum dominates synthesis within 3 dB") {
  const ApertureConfig c;
  struct Row {
    double theta;
    const char* code;
    double gain;
  };
  const Row rows[] = {{-30.0, golden::kExhaustiveMinus30, golden::kExhaustiveGainMinus30},
                      {0.0, golden::kExhaustiveZero, golden::kExhaustiveGainZero},
                      {30.0, golden::kExhaustivePlus30, golden::kExhaustiveGainPlus30}};
  for (const Row& r : rows) {
    const SteeringTarget t{r.theta, 60e9};
    const OracleResult best = exhaustive_best_code(c, t);
    CHECK(best.code.to_string() == r.code);
    CHECK(close_rel(best.gain, r.gain, 1e-12));
    const double synth = field_gain(c, synthesize_code(c, t), t);
    CHECK(best.gain >= synth * (1.0 - 1e-12));
    CHECK(db(best.gain / synth) <= 3.0);
  }
}

TEST_CASE("exhaustive search is deterministic across thread counts") {
  const ApertureConfig c;
  const SteeringTarget t{12.5, 61e9};
  const OracleResult a = exhaustive_best_code(c, t, 1);
  const OracleResult b = exhaustive_best_code(c, t, 7);
  const OracleResult d = exhaustive_best_code(c, t, 0);
  CHECK(a.code == b.code);
  CHECK(a.code == d.code);
  CHECK(a.gain == b.gain);
  CHECK(a.gain == d.gain);
  CHECK(synthesize_code(c, t) == synthesize_code(c, t));
}

TEST_CASE("exhaustive search with depletion uses the full model") {
  ApertureConfig c;
  c.depletion = 0.2;
  const SteeringTarget t{20.0, 60e9};
  const OracleResult best = exhaustive_best_code(c, t, 4);
  CHECK(close_rel(best.gain, field_gain(c, best.code, t), 1e-12));
  CHECK(best.gain >= field_gain(c, synthesize_code(c, t), t));
}

TEST_CASE("enumeration agrees with an independent nested-loop search (N = 8)") {
  SeededRandom rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const ApertureConfig c = ApertureConfig::uniform(8, rng.uniform(1.5e-3, 3e-3));
    const SteeringTarget t{rng.uniform(-60.0, 60.0), rng.uniform(59e9, 63e9)};
    const double w = kTwoPi * t.frequency;
    const cplx a = polarizability(c.meta, w, AtomState::On);
    const cplx beta = guided_wavenumber(c.feed, w);
    const double u = w / kSpeedOfLight * std::sin(t.theta_deg * kPi / 180.0);
    std::vector<cplx> z;
    for (double x : c.feed.positions) z.push_back(a * std::exp(cplx{0.0, -1.0} * beta * x) * std::exp(cplx{0.0, u * x}));
    const oracle::NestedBest ref = oracle::nested_loop_best8(z);
    const OracleResult got = exhaustive_best_code(c, t, 3);
    CHECK(got.code.to_integer() == ref.value);
    CHECK(close_rel(got.gain, ref.gain, 1e-12));
  }
}

TEST_CASE("frequency scan") {
  const ApertureConfig c;
  const std::vector<double> one{61e9};
  const ScanResult s1 = frequency_scan(c, kAlternating, one);
  REQUIRE(s1.rows.size() == 1);
  const BeamMetrics direct = beam_metrics(code_pattern(c, kAlternating, 61e9));
  CHECK(s1.rows[0].metrics.peak_angle == direct.peak_angle);
  CHECK(s1.rows[0].metrics.hpbw == direct.hpbw);

  const std::vector<double> three{60e9, 61e9, 62e9};
  const ScanResult s3 = frequency_scan(c, kAlternating, three);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      CHECK(std::abs(s3.rows[i].metrics.peak_angle - s3.rows[j].metrics.peak_angle) >= 0.8);

  const double paired = beam_metrics(code_pattern(c, HologramCode::from_string("1100110011001100"), 60e9)).peak_angle;
  CHECK(std::abs(paired - golden::kPairedPeak60GHz) < 0.01);
  CHECK(std::abs(paired - s3.rows[0].metrics.peak_angle) > 1.0);

  CHECK_THROWS_WITH(frequency_scan(c, HologramCode::from_integer(0, 16), three), doctest::Contains("no beam"));
  const std::vector<double> bad{61e9, 60e9};
  CHECK_THROWS_AS(frequency_scan(c, kAlternating, bad), DomainError);
  const std::vector<double> dup{60e9, 60e9};
  CHECK_THROWS_AS(frequency_scan(c, kAlternating, dup), DomainError);
}

TEST_CASE("scan monotonicity for the alternating code") {
  const ApertureConfig c;
  std::vector<double> freqs;
  for (int k = 0; k <= 8; ++k) freqs.push_back(59e9 + 0.5e9 * k);
  const ScanResult s = frequency_scan(c, kAlternating, freqs);
  for (std::size_t i = 1; i < s.rows.size(); ++i) CHECK(s.rows[i].metrics.peak_angle >= s.rows[i - 1].metrics.peak_angle);
}

TEST_CASE("hybrid diversity table") {
  const ApertureConfig c;
  const std::vector<double> f1{60e9};
  const std::vector<HologramCode> c1{kAlternating};
  const HybridTable t1 = hybrid_diversity_table(c, c1, f1);
  REQUIRE(t1.cells.size() == 1);
  REQUIRE(t1.cells[0].size() == 1);

  const std::vector<double> f3{60e9, 61e9, 62e9};
  const HybridTable t = hybrid_diversity_table(c, example_codes(), f3);
  REQUIRE(t.cells.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    REQUIRE(t.cells[i].size() == 3);
    CHECK(t.peak_span() > t.row_span(i));
  }

  const std::vector<HologramCode> twice{kAlternating, kAlternating};
  const HybridTable d = hybrid_diversity_table(c, twice, f3);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(d.cells[0][j].peak_angle == d.cells[1][j].peak_angle);
    CHECK(d.cells[0][j].directivity_1d == d.cells[1][j].directivity_1d);
  }
  CHECK_THROWS_AS(hybrid_diversity_table(c, std::vector<HologramCode>{}, f3), DomainError);
}
