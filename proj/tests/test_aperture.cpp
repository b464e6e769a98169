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
#include <limits>
#include <vector>

#include <doctest.h>

#include "dma/aperture.hpp"
#include "dma/errors.hpp"
#include "dma/holography.hpp"
#include "dma/rng.hpp"
#include "goldens.hpp"
#include "support.hpp"

using namespace dma;
using dma::test::close_rel;

namespace {

ApertureConfig lossless_config() {
  ApertureConfig c;
  c.feed.tan_delta = 0.0;
  return c;
}

const HologramCode kAlternating = HologramCode::from_string("1010101010101010");

RadiationPattern synthetic(const std::vector<double>& theta, double (*mag)(double)) {
  RadiationPattern p;
  p.theta_deg = theta;
  for (double t : theta) p.field.emplace_back(mag(t), 0.0);
  return p;
}

}  // namespace

TEST_CASE("hologram code text and integer forms") {
  const HologramCode c = HologramCode::from_string("1100000000000001");
  CHECK(c.size() == 16);
  CHECK(c[0]);
  CHECK(c[1]);
  CHECK_FALSE(c[2]);
  CHECK(c.to_integer() == (1u | 2u | (1u << 15)));
  CHECK(c.to_string() == "1100000000000001");
  CHECK(c.active_count() == 3);
  CHECK(HologramCode::from_integer(c.to_integer(), 16) == c);
  CHECK(HologramCode::from_string("0000").is_zero());
  CHECK_THROWS_AS(HologramCode::from_string("10201"), ConfigError);
  CHECK_THROWS_AS(HologramCode::from_string(""), ConfigError);
  CHECK((HologramCode::from_string("1100") | HologramCode::from_string("0101")).to_string() == "1101");
  CHECK_THROWS_AS(HologramCode::from_string("11") | HologramCode::from_string("111"), DomainError);

  SeededRandom rng(1);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t v = rng.bits() & 0xFFFF;
    const HologramCode h = HologramCode::from_integer(v, 16);
    REQUIRE(h.to_integer() == v);
    REQUIRE(HologramCode::from_string(h.to_string()) == h);
  }
}

TEST_CASE("angle grid") {
  const AngleGrid g;
  CHECK(g.size() == 1801);
  CHECK(g.angle(0) == -90.0);
  CHECK(g.angle(1800) == 90.0);
  CHECK(g.angle(900) == 0.0);
  AngleGrid bad;
  bad.step_deg = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("element moments") {
  const ApertureConfig c = lossless_config();
  const double w = kTwoPi * 60e9;
  for (const cplx& m : element_moments(c, HologramCode::from_integer(0, 16), w)) CHECK(m == cplx{0.0, 0.0});

  const std::vector<cplx> single = element_moments(c, HologramCode::from_string("1000000000000000"), w);
  CHECK(single[0] == polarizability(c.meta, w, AtomState::On));
  for (std::size_t n = 1; n < 16; ++n) CHECK(single[n] == cplx{0.0, 0.0});

  const ApertureConfig lossy;
  const std::vector<cplx> alt = element_moments(lossy, kAlternating, w);
  for (std::size_t n = 0; n < 16; ++n) {
    if (n % 2) {
      CHECK(alt[n] == cplx{0.0, 0.0});
    } else {
      CHECK(close_rel(alt[n], golden::kAlternatingMoments60GHz[n], 1e-12));
    }
  }
  CHECK_THROWS_AS(element_moments(c, HologramCode::from_string("101"), w), DomainError);
}

TEST_CASE("far field of one and two elements") {
  const ApertureConfig c = lossless_config();
  const double w = kTwoPi * 60e9;
  std::vector<cplx> m(16, 0.0);
  m[3] = {0.3, -0.7};
  const RadiationPattern one = far_field(c, m, w);
  for (const cplx& e : one.field) CHECK(std::abs(std::abs(e) - std::abs(m[3])) < 1e-15);

  std::fill(m.begin(), m.end(), cplx{0.0, 0.0});
  m[0] = m[1] = 1.0;
  const RadiationPattern two = far_field(c, m, w);
  const double k0 = w / kSpeedOfLight;
  for (std::size_t i = 0; i < two.field.size(); ++i) {
    const double s = std::sin(deg_to_rad(two.theta_deg[i]));
    REQUIRE(std::abs(std::abs(two.field[i]) - 2.0 * std::abs(std::cos(k0 * c.spacing * s / 2.0))) < 1e-12);
  }
  const BeamMetrics bm = beam_metrics(two);
  CHECK(std::abs(bm.peak_angle) <= c.theta.step_deg);
  CHECK_THROWS_AS(far_field(c, std::vector<cplx>(3, 1.0), w), DomainError);
}

TEST_CASE("zero code gives an identically zero field and no beam") {
  const RadiationPattern p = code_pattern(ApertureConfig{}, HologramCode::from_integer(0, 16), 60e9);
  for (const cplx& e : p.field) CHECK(e == cplx{0.0, 0.0});
  CHECK_THROWS_WITH(beam_metrics(p), doctest::Contains("no beam"));
  CHECK_THROWS_AS(normalize_peak(p), DomainError);
}

TEST_CASE("beam metrics of a truncated cosine lobe") {
  const std::vector<double> theta = AngleGrid{}.angles();
  const RadiationPattern p = synthetic(theta, [](double t) {
    return std::abs(t) < 30.0 ? std::cos(t / 30.0 * kPi / 2.0) : 0.0;
  });
  const BeamMetrics m = beam_metrics(p);
  CHECK(std::abs(m.peak_angle) < 1e-12);
  CHECK(std::abs(m.peak_magnitude - 1.0) < 1e-12);
  // cos(x) = 1/sqrt(2) at x = pi/4, i.e. theta = 15 deg
  CHECK(std::abs(m.hpbw - 30.0) <= 0.1);
  CHECK(m.sll == -std::numeric_limits<double>::infinity());
  // (1/pi) * integral of cos^2 over the lobe = (1/pi) * (pi/6) -> D = 6
  CHECK(std::abs(m.directivity_1d - 10.0 * std::log10(6.0)) < 1e-3);
}

TEST_CASE("beam metrics: missing crossing and sidelobes") {
  const std::vector<double> theta = AngleGrid{}.angles();
  const RadiationPattern edge = synthetic(theta, [](double t) { return 1.0 + t / 90.0; });
  const BeamMetrics e = beam_metrics(edge);
  CHECK(e.peak_angle == doctest::Approx(90.0));
  CHECK(std::isnan(e.hpbw));

  const RadiationPattern lobes = synthetic(theta, [](double t) {
    const double x = deg_to_rad(t) * 6.0;
    return std::abs(x) < 1e-12 ? 1.0 : std::abs(std::sin(x) / x);
  });
  const BeamMetrics l = beam_metrics(lobes);
  CHECK(std::abs(l.sll - (-13.26)) < 0.05);  // first sinc sidelobe
  CHECK(l.sll <= 0.0);
}

TEST_CASE("alternating code peaks follow the spatial harmonic") {
  const ApertureConfig c;
  for (std::size_t k = 0; k < golden::kAlternatingPeakDeg.size(); ++k) {
    const double f = 59e9 + 0.5e9 * static_cast<double>(k);
    const BeamMetrics m = beam_metrics(code_pattern(c, kAlternating, f));
    CHECK(std::abs(m.peak_angle - golden::kAlternatingPeakDeg[k]) < 0.01);
    CHECK(std::abs(m.peak_angle - golden::kAlternatingHarmonicDeg[k]) < 0.3);
  }
  const double p60 = beam_metrics(code_pattern(c, kAlternating, 60e9)).peak_angle;
  const double p62 = beam_metrics(code_pattern(c, kAlternating, 62e9)).peak_angle;
  CHECK(std::abs(p60 + 6.0) < 0.5);
  CHECK(p62 - p60 >= 2.0);
}

TEST_CASE("pattern correlation") {
  const ApertureConfig c;
  const RadiationPattern a = code_pattern(c, kAlternating, 60e9);
  const RadiationPattern b = code_pattern(c, kAlternating, 62e9);
  CHECK(std::abs(pattern_correlation(a, a) - 1.0) < 1e-14);
  RadiationPattern scaled = a;
  for (cplx& e : scaled.field) e *= cplx{-2.5, 0.75};
  CHECK(std::abs(pattern_correlation(a, scaled) - 1.0) < 1e-14);
  const double r = pattern_correlation(a, b);
  CHECK(r < 1.0);
  CHECK(close_rel(r, golden::kAlternatingCorrelation60vs62, 1e-9));
  CHECK(pattern_correlation(b, a) == doctest::Approx(r).epsilon(1e-14));

  RadiationPattern other = a;
  other.theta_deg.pop_back();
  other.field.pop_back();
  CHECK_THROWS_AS(pattern_correlation(a, other), DomainError);
  const RadiationPattern zero = code_pattern(c, HologramCode::from_integer(0, 16), 60e9);
  CHECK_THROWS_AS(pattern_correlation(a, zero), DomainError);
}

TEST_CASE("code diversity among the example codes") {
  const ApertureConfig c;
  const auto& codes = example_codes();
  REQUIRE(codes.size() == 6);
  double lowest = 1.0;
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (std::size_t j = i + 1; j < codes.size(); ++j)
      lowest = std::min(lowest, pattern_correlation(code_pattern(c, codes[i], 60e9), code_pattern(c, codes[j], 60e9)));
  CHECK(lowest < 0.5);
}

TEST_CASE("property: superposition over disjoint codes") {
  SeededRandom rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    ApertureConfig c;
    c.meta.f0 = rng.uniform(59e9, 63e9);
    c.feed.tan_delta = rng.uniform(0.0, 0.01);
    const std::uint64_t a = rng.bits() & 0xFFFF;
    const std::uint64_t b = rng.bits() & 0xFFFF & ~a;
    const double f = rng.uniform(59e9, 63e9);
    const RadiationPattern pa = code_pattern(c, HologramCode::from_integer(a, 16), f);
    const RadiationPattern pb = code_pattern(c, HologramCode::from_integer(b, 16), f);
    const RadiationPattern pab = code_pattern(c, HologramCode::from_integer(a | b, 16), f);
    double worst = 0.0;
    for (std::size_t i = 0; i < pab.field.size(); ++i)
      worst = std::max(worst, std::abs(pab.field[i] - pa.field[i] - pb.field[i]));
    REQUIRE(worst < 1e-12);
  }
}

TEST_CASE("port response: all-off lossless line") {
  const ApertureConfig c = lossless_config();
  const FrequencyGrid grid(59e9, 63e9, 101);
  const PortResponse r = port_response(c, HologramCode::from_integer(0, 16), grid);
  for (std::size_t f = 0; f < grid.size(); ++f) {
    CHECK(std::abs(r.forward.s11[f]) < 1e-15);
    CHECK(std::abs(std::abs(r.forward.s21[f]) - 1.0) < 1e-13);
    CHECK(r.radiated_fraction.values[f] == 0.0);
    CHECK(std::abs(r.dielectric_loss.values[f]) < 1e-13);
  }
}

TEST_CASE("port response: single active element") {
  const FrequencyGrid grid(59e9, 63e9, 41);
  for (const ApertureConfig& c : {lossless_config(), ApertureConfig{}}) {
    const PortResponse first = port_response(c, HologramCode::from_string("1000000000000000"), grid);
    const PortResponse last = port_response(c, HologramCode::from_string("0000000000000001"), grid);
    const TwoPortResponse shunt = shunt_s_params(c.meta, AtomState::On, grid);
    for (std::size_t f = 0; f < grid.size(); ++f) {
      const cplx line = std::exp(-kJ * guided_wavenumber(c.feed, grid.omega(f)) * (15.0 * c.spacing));
      CHECK(close_rel(first.forward.s21[f], shunt.s21[f] * line, 1e-12));
      CHECK(close_rel(first.forward.s11[f], shunt.s11[f], 1e-12));
      CHECK(close_rel(last.forward.s21[f], shunt.s21[f] * line, 1e-12));
      CHECK(close_rel(last.forward.s11[f], shunt.s11[f] * line * line, 1e-12));
    }
  }
}

TEST_CASE("port response goldens at 60 GHz") {
  const FrequencyGrid grid(59e9, 61e9, 3);
  const ApertureConfig c;
  const PortResponse all = port_response(c, HologramCode::from_string("1111111111111111"), grid);
  const PortResponse alt = port_response(c, kAlternating, grid);
  CHECK(close_rel(all.forward.s11[1], golden::kCascadeS11AllOn60GHz, 1e-10));
  CHECK(close_rel(all.forward.s21[1], golden::kCascadeS21AllOn60GHz, 1e-10));
  CHECK(close_rel(alt.forward.s11[1], golden::kCascadeS11Alternating60GHz, 1e-10));
  CHECK(close_rel(alt.forward.s21[1], golden::kCascadeS21Alternating60GHz, 1e-10));
  CHECK(std::abs(all.radiated_fraction.values[1] - alt.radiated_fraction.values[1]) > 1e-3);
}

TEST_CASE("property: cascade energy partition, passivity and reciprocity") {
  SeededRandom rng(22);
  const FrequencyGrid grid(59e9, 63e9, 81);
  for (int trial = 0; trial <= 100; ++trial) {
    ApertureConfig c;
    if (trial > 0) {
      c.meta.f0 = rng.uniform(59e9, 63e9);
      c.meta.gamma = kTwoPi * rng.uniform(0.5e9, 2e9);
      c.meta.coupling = rng.uniform(0.1, 1.0);
      c.feed.tan_delta = trial % 3 == 0 ? 0.0 : rng.uniform(0.0, 0.01);
    }
    const HologramCode code = HologramCode::from_integer(rng.bits() & 0xFFFF, 16);
    const PortResponse r = port_response(c, code, grid);
    for (std::size_t f = 0; f < grid.size(); ++f) {
      const double refl = std::norm(r.forward.s11[f]), trans = std::norm(r.forward.s21[f]);
      const double rad = r.radiated_fraction.values[f], loss = r.dielectric_loss.values[f];
      REQUIRE(std::abs(refl + trans + rad + loss - 1.0) < 1e-9);
      REQUIRE(refl + trans <= 1.0 + 1e-12);
      REQUIRE(rad >= 0.0);
      REQUIRE(rad <= 1.0);
      REQUIRE(loss >= -1e-12);
      REQUIRE(std::abs(r.s12[f] - r.forward.s21[f]) <= 1e-12 * std::max(1.0, std::abs(r.forward.s21[f])));
      if (c.feed.tan_delta == 0.0) REQUIRE(std::abs(loss) < 1e-12);
    }
  }
}

TEST_CASE("frequency diversity: peak angle nondecreasing in frequency") {
  const ApertureConfig c;
  double prev = -90.0;
  for (int k = 0; k <= 8; ++k) {
    const double p = beam_metrics(code_pattern(c, kAlternating, 59e9 + 0.5e9 * k)).peak_angle;
    CHECK(p >= prev);
    prev = p;
  }
}
