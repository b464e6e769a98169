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

#include "dma/aperture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dma/errors.hpp"

namespace dma {

// ---------------------------------------------------------------- codes

HologramCode::HologramCode(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

HologramCode HologramCode::from_string(std::string_view text) {
  if (text.empty()) throw ConfigError("empty hologram code");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw ConfigError("hologram code must contain only '0' and '1': \"" + std::string(text) + "\"");
    }
    bits.push_back(ch == '1' ? 1 : 0);
  }
  return HologramCode(std::move(bits));
}

HologramCode HologramCode::from_integer(std::uint64_t value, std::size_t n_elements) {
  require(n_elements <= 64, "codes longer than 64 elements have no integer form");
  std::vector<std::uint8_t> bits(n_elements);
  for (std::size_t i = 0; i < n_elements; ++i) bits[i] = (value >> i) & 1U;
  return HologramCode(std::move(bits));
}

std::string HologramCode::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
  return s;
}

std::uint64_t HologramCode::to_integer() const {
  require(bits_.size() <= 64, "codes longer than 64 elements have no integer form");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) v |= static_cast<std::uint64_t>(bits_[i]) << i;
  return v;
}

std::size_t HologramCode::active_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

HologramCode HologramCode::operator|(const HologramCode& other) const {
  require(size() == other.size(), "cannot OR codes of different length");
  std::vector<std::uint8_t> bits(size());
  for (std::size_t i = 0; i < size(); ++i) bits[i] = bits_[i] | other.bits_[i];
  return HologramCode(std::move(bits));
}

// ---------------------------------------------------------------- grids / config

std::size_t AngleGrid::size() const {
  return static_cast<std::size_t>(std::llround((stop_deg - start_deg) / step_deg)) + 1;
}

double AngleGrid::angle(std::size_t i) const {
  const std::size_t n = size();
  if (i + 1 == n) return stop_deg;
  return start_deg + (stop_deg - start_deg) * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::vector<double> AngleGrid::angles() const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = angle(i);
  return out;
}

void AngleGrid::validate() const {
  require(std::isfinite(step_deg) && step_deg > 0.0, "angle grid step must be > 0");
  require(start_deg >= -90.0 && stop_deg <= 90.0 && start_deg < stop_deg,
          "angle grid must lie within [-90, 90] deg with start < stop");
  const double count = (stop_deg - start_deg) / step_deg;
  require(std::abs(count - std::round(count)) < 1e-9 * std::max(1.0, count),
          "angle grid span must be a whole number of steps");
}

ApertureConfig ApertureConfig::uniform(std::size_t n_elements, double spacing) {
  ApertureConfig c;
  c.n_elements = n_elements;
  c.spacing = spacing;
  c.feed.positions = uniform_positions(n_elements, spacing);
  return c;
}

void ApertureConfig::validate() const {
  require(n_elements >= 1, "aperture needs at least one element");
  require(std::isfinite(spacing) && spacing > 0.0, "element spacing must be > 0");
  require(feed.positions.size() == n_elements, "feed positions must match element count");
  if (depletion) require(*depletion >= 0.0 && *depletion < 1.0, "depletion kappa must lie in [0, 1)");
  meta.validate();
  feed.validate();
  theta.validate();
}

// ---------------------------------------------------------------- radiation

std::vector<cplx> element_moments(const ApertureConfig& config, const HologramCode& code, double omega) {
  require(code.size() == config.n_elements, "code length " + std::to_string(code.size()) +
                                                " does not match element count " +
                                                std::to_string(config.n_elements));
  std::optional<std::vector<double>> coupling;
  if (config.depletion) {
    coupling.emplace(config.n_elements, 0.0);
    for (std::size_t n = 0; n < config.n_elements; ++n) (*coupling)[n] = code[n] ? *config.depletion : 0.0;
  }
  const FeedExcitation feed =
      coupling ? feed_field(config.feed, omega, std::span<const double>(*coupling)) : feed_field(config.feed, omega);

  const cplx on = radiating_strength(config.meta, AtomState::On, omega);
  const cplx off = radiating_strength(config.meta, AtomState::Off, omega);
  std::vector<cplx> moments(config.n_elements);
  for (std::size_t n = 0; n < config.n_elements; ++n) {
    moments[n] = (code[n] ? on : off) * feed.amplitudes[n];
  }
  return moments;
}

std::vector<cplx> array_field(const ApertureConfig& config, std::span<const cplx> moments, double omega,
                              std::span<const double> angles_deg) {
  require(moments.size() == config.n_elements, "moment count does not match element count");
  const double k0 = omega / kSpeedOfLight;
  const auto& x = config.feed.positions;
  std::vector<cplx> field(angles_deg.size());
  for (std::size_t i = 0; i < angles_deg.size(); ++i) {
    const double u = k0 * std::sin(deg_to_rad(angles_deg[i]));
    cplx sum{0.0, 0.0};
    for (std::size_t n = 0; n < moments.size(); ++n) {
      if (moments[n] == cplx{0.0, 0.0}) continue;
      sum += moments[n] * std::polar(1.0, u * x[n]);
    }
    field[i] = sum;
  }
  return field;
}

RadiationPattern far_field(const ApertureConfig& config, std::span<const cplx> moments, double omega) {
  RadiationPattern p;
  p.frequency = omega / kTwoPi;
  p.theta_deg = config.theta.angles();
  p.field = array_field(config, moments, omega, p.theta_deg);
  return p;
}

RadiationPattern code_pattern(const ApertureConfig& config, const HologramCode& code, double frequency) {
  const double omega = kTwoPi * frequency;
  const std::vector<cplx> m = element_moments(config, code, omega);
  return far_field(config, m, omega);
}

RadiationPattern normalize_peak(const RadiationPattern& pattern) {
  double peak = 0.0;
  for (const cplx& e : pattern.field) peak = std::max(peak, std::abs(e));
  require(peak > 0.0, "no beam: pattern is identically zero");
  RadiationPattern out = pattern;
  for (cplx& e : out.field) e /= peak;
  out.normalization = PatternNormalization::Peak;
  return out;
}

BeamMetrics beam_metrics(const RadiationPattern& pattern) {
  const std::size_t n = pattern.field.size();
  require(n == pattern.theta_deg.size(), "pattern field and angle grid differ in length");
  require(n >= 2, "pattern needs at least two angles");

  std::vector<double> mag(n);
  for (std::size_t i = 0; i < n; ++i) mag[i] = std::abs(pattern.field[i]);

  // first maximum: smallest angle wins ties
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (mag[i] > mag[k]) k = i;
  }
  require(mag[k] > 0.0, "no beam: pattern is identically zero");

  const auto& theta = pattern.theta_deg;
  const double step = theta[1] - theta[0];
  BeamMetrics m;
  m.peak_angle = theta[k];
  m.peak_magnitude = mag[k];
  if (k > 0 && k + 1 < n && mag[k - 1] > 0.0 && mag[k + 1] > 0.0) {
    const double ym = 20.0 * std::log10(mag[k - 1]);
    const double y0 = 20.0 * std::log10(mag[k]);
    const double yp = 20.0 * std::log10(mag[k + 1]);
    const double curvature = ym - 2.0 * y0 + yp;
    if (curvature < 0.0) {
      const double offset = std::clamp(0.5 * (ym - yp) / curvature, -0.5, 0.5);
      m.peak_angle = theta[k] + offset * step;
      m.peak_magnitude = std::pow(10.0, (y0 - 0.25 * (ym - yp) * offset) / 20.0);
    }
  }

  // -3 dB crossings
  const double half_power = m.peak_magnitude / std::sqrt(2.0);
  double left = std::numeric_limits<double>::quiet_NaN();
  double right = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = k; i-- > 0;) {
    if (mag[i] < half_power) {
      const double t = (half_power - mag[i]) / (mag[i + 1] - mag[i]);
      left = theta[i] + t * (theta[i + 1] - theta[i]);
      break;
    }
  }
  for (std::size_t i = k + 1; i < n; ++i) {
    if (mag[i] < half_power) {
      const double t = (mag[i - 1] - half_power) / (mag[i - 1] - mag[i]);
      right = theta[i - 1] + t * (theta[i] - theta[i - 1]);
      break;
    }
  }
  m.hpbw = right - left;  // NaN propagates when a side is missing

  // main lobe spans the monotone descent on both sides of the peak
  std::size_t lobe_lo = k;
  while (lobe_lo > 0 && mag[lobe_lo - 1] <= mag[lobe_lo]) --lobe_lo;
  std::size_t lobe_hi = k;
  while (lobe_hi + 1 < n && mag[lobe_hi + 1] <= mag[lobe_hi]) ++lobe_hi;

  double sidelobe = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= lobe_lo && i <= lobe_hi) continue;
    const bool left_ok = i == 0 || mag[i] >= mag[i - 1];
    const bool right_ok = i + 1 == n || mag[i] >= mag[i + 1];
    if (left_ok && right_ok) sidelobe = std::max(sidelobe, mag[i]);
  }
  m.sll = sidelobe > 0.0 ? std::min(0.0, 20.0 * std::log10(sidelobe / m.peak_magnitude))
                         : -std::numeric_limits<double>::infinity();

  // (1/pi) * integral |E|^2 dtheta, trapezoid in radians
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    integral += 0.5 * (mag[i] * mag[i] + mag[i + 1] * mag[i + 1]) * deg_to_rad(theta[i + 1] - theta[i]);
  }
  const double mean_power = integral / kPi;
  m.directivity_1d = 10.0 * std::log10(m.peak_magnitude * m.peak_magnitude / mean_power);
  return m;
}

double pattern_correlation(const RadiationPattern& a, const RadiationPattern& b) {
  require(a.theta_deg == b.theta_deg, "pattern correlation requires identical angle grids");
  require(a.field.size() == a.theta_deg.size() && b.field.size() == b.theta_deg.size(),
          "pattern field and angle grid differ in length");
  cplx inner{0.0, 0.0};
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.field.size(); ++i) {
    inner += std::conj(a.field[i]) * b.field[i];
    na += std::norm(a.field[i]);
    nb += std::norm(b.field[i]);
  }
  require(na > 0.0 && nb > 0.0, "pattern correlation of a zero-norm pattern");
  return std::clamp(std::abs(inner) / std::sqrt(na * nb), 0.0, 1.0);
}

// ---------------------------------------------------------------- port cascade

namespace {

struct CascadeResult {
  cplx s11;
  cplx s21;
  double radiated;
  double dielectric;
};

// Load-side sweep: start from a matched termination (V = I = 1) behind the last
// shunt and walk back to the input plane, accumulating absorbed power per shunt
// and per line section. Normalized line impedance is 1, so P = Re(V conj(I)).
CascadeResult sweep_cascade(std::span<const cplx> admittance, std::span<const double> lengths, cplx beta) {
  cplx v{1.0, 0.0};
  cplx i{1.0, 0.0};
  double radiated = 0.0;
  double dielectric = 0.0;
  for (std::size_t n = admittance.size(); n-- > 0;) {
    radiated += admittance[n].real() * std::norm(v);
    i += admittance[n] * v;
    if (n == 0) break;
    const cplx phase = beta * lengths[n - 1];
    const cplx c = std::cos(phase);
    const cplx s = std::sin(phase);
    const double p_right = (v * std::conj(i)).real();
    const cplx v_left = c * v + kJ * s * i;
    const cplx i_left = kJ * s * v + c * i;
    v = v_left;
    i = i_left;
    dielectric += (v * std::conj(i)).real() - p_right;
  }
  const cplx a = 0.5 * (v + i);
  const cplx b = 0.5 * (v - i);
  const double scale = 1.0 / std::norm(a);
  return {b / a, 1.0 / a, radiated * scale, dielectric * scale};
}

}  // namespace

PortResponse port_response(const ApertureConfig& config, const HologramCode& code, const FrequencyGrid& grid) {
  config.validate();
  require(code.size() == config.n_elements, "code length does not match element count");
  const std::size_t n = config.n_elements;
  const auto& x = config.feed.positions;
  std::vector<double> lengths(n > 0 ? n - 1 : 0);
  for (std::size_t k = 0; k + 1 < n; ++k) lengths[k] = x[k + 1] - x[k];
  std::vector<double> lengths_rev(lengths.rbegin(), lengths.rend());

  const std::size_t m = grid.size();
  PortResponse out{
      .forward = {grid, std::vector<cplx>(m), std::vector<cplx>(m)},
      .s12 = std::vector<cplx>(m),
      .s22 = std::vector<cplx>(m),
      .radiated_fraction = {grid, std::vector<double>(m)},
      .dielectric_loss = {grid, std::vector<double>(m)},
  };

  std::vector<cplx> y(n);
  std::vector<cplx> y_rev(n);
  for (std::size_t f = 0; f < m; ++f) {
    const double omega = grid.omega(f);
    const cplx beta = guided_wavenumber(config.feed, omega);
    for (std::size_t k = 0; k < n; ++k) {
      y[k] = shunt_admittance(config.meta, omega, state_from_bit(code[k]));
      y_rev[n - 1 - k] = y[k];
    }
    const CascadeResult fwd = sweep_cascade(y, lengths, beta);
    const CascadeResult rev = sweep_cascade(y_rev, lengths_rev, beta);
    out.forward.s11[f] = fwd.s11;
    out.forward.s21[f] = fwd.s21;
    out.s22[f] = rev.s11;
    out.s12[f] = rev.s21;
    out.radiated_fraction.values[f] = std::clamp(fwd.radiated, 0.0, 1.0);
    out.dielectric_loss.values[f] = fwd.dielectric;
  }
  return out;
}

}  // namespace dma
