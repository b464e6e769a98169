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

#include "dma/dispersion.hpp"

#include <cmath>
#include <limits>

#include "dma/errors.hpp"

namespace dma {

namespace {

void require_derivative_grid(const RealSpectrum& s) {
  require(s.grid.size() >= 3, "grid too coarse for derivatives (need >= 3 points)");
  require(s.values.size() == s.grid.size(), "spectrum length does not match its grid");
}

}  // namespace

std::vector<double> omega_derivative(std::span<const double> values, const FrequencyGrid& grid) {
  const std::size_t n = values.size();
  require(n >= 3, "grid too coarse for derivatives (need >= 3 points)");
  require(n == grid.size(), "spectrum length does not match its grid");
  const double h = grid.omega_step();
  std::vector<double> d(n);
  d[0] = (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (values[i + 1] - values[i - 1]) / (2.0 * h);
  d[n - 1] = (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * h);
  return d;
}

RealSpectrum unwrap_phase(std::span<const cplx> samples, const FrequencyGrid& grid) {
  require(!samples.empty(), "cannot unwrap an empty spectrum");
  require(samples.size() == grid.size(), "spectrum length does not match its grid");
  RealSpectrum out{grid, std::vector<double>(samples.size())};
  double previous_wrapped = std::arg(samples[0]);
  double accumulated = previous_wrapped;
  out.values[0] = accumulated;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double wrapped = std::arg(samples[i]);
    // step into (-pi, pi]
    double step = std::remainder(wrapped - previous_wrapped, kTwoPi);
    if (step <= -kPi) step += kTwoPi;
    accumulated += step;
    out.values[i] = accumulated;
    previous_wrapped = wrapped;
  }
  return out;
}

RealSpectrum unwrap_phase(const TwoPortResponse& response) {
  return unwrap_phase(response.s21, response.grid);
}

RealSpectrum group_delay(const RealSpectrum& phase) {
  require_derivative_grid(phase);
  RealSpectrum out{phase.grid, omega_derivative(phase.values, phase.grid)};
  for (double& v : out.values) v = -v;
  return out;
}

RealSpectrum effective_index(const TwoPortResponse& response, double thickness) {
  require(std::isfinite(thickness) && thickness > 0.0, "retrieval thickness must be > 0");
  RealSpectrum phase = unwrap_phase(response);
  for (std::size_t i = 0; i < phase.values.size(); ++i) {
    phase.values[i] = -phase.values[i] * kSpeedOfLight / (phase.grid.omega(i) * thickness);
  }
  return phase;
}

RealSpectrum group_index(const RealSpectrum& index) {
  require_derivative_grid(index);
  const std::vector<double> slope = omega_derivative(index.values, index.grid);
  RealSpectrum out{index.grid, std::vector<double>(index.values.size())};
  for (std::size_t i = 0; i < slope.size(); ++i) {
    out.values[i] = index.values[i] + index.grid.omega(i) * slope[i];
  }
  return out;
}

RealSpectrum group_velocity(const RealSpectrum& group_index) {
  RealSpectrum out{group_index.grid, std::vector<double>(group_index.values.size())};
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const double ng = group_index.values[i];
    if (std::abs(ng) < kGroupIndexSingularity) {
      out.values[i] = ng < 0.0 ? -inf : inf;
    } else {
      out.values[i] = kSpeedOfLight / ng;
    }
  }
  return out;
}

RealSpectrum effective_permittivity(const RealSpectrum& index) {
  RealSpectrum out = index;
  for (double& v : out.values) v = v * v;
  return out;
}

BandList anomalous_bands(const RealSpectrum& index, double tolerance) {
  require_derivative_grid(index);
  const std::vector<double> slope = omega_derivative(index.values, index.grid);
  const FrequencyGrid& grid = index.grid;
  // positive inside a band
  auto excess = [&](std::size_t i) { return -tolerance - slope[i]; };
  auto crossing = [&](std::size_t i) {
    const double a = excess(i);
    const double b = excess(i + 1);
    const double t = a / (a - b);
    return grid.frequency(i) + t * (grid.frequency(i + 1) - grid.frequency(i));
  };

  BandList bands;
  bool inside = excess(0) > 0.0;
  double start = grid.frequency(0);
  for (std::size_t i = 0; i + 1 < slope.size(); ++i) {
    const bool next_inside = excess(i + 1) > 0.0;
    if (!inside && next_inside) {
      start = crossing(i);
    } else if (inside && !next_inside) {
      bands.push_back({start, crossing(i)});
    }
    inside = next_inside;
  }
  if (inside) bands.push_back({start, grid.f_stop()});
  return bands;
}

DispersionIndicators analyze_dispersion(const TwoPortResponse& response, double thickness) {
  require(response.grid.size() >= 3, "grid too coarse for derivatives (need >= 3 points)");
  DispersionIndicators out{
      .phase = unwrap_phase(response),
      .group_delay = {response.grid, {}},
      .effective_index = effective_index(response, thickness),
      .group_index = {response.grid, {}},
      .group_velocity = {response.grid, {}},
      .effective_permittivity = {response.grid, {}},
      .anomalous_bands = {},
  };
  out.group_delay = group_delay(out.phase);
  out.group_index = group_index(out.effective_index);
  out.group_velocity = group_velocity(out.group_index);
  out.effective_permittivity = effective_permittivity(out.effective_index);
  out.anomalous_bands = anomalous_bands(out.effective_index);
  return out;
}

}  // namespace dma
