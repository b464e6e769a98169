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

#pragma once

#include <span>
#include <vector>

#include "dma/spectrum.hpp"

namespace dma {

/// Closed frequency interval in Hz.
struct Band {
  double f_lo;
  double f_hi;
  bool contains(double f) const { return f >= f_lo && f <= f_hi; }
};

using BandList = std::vector<Band>;

inline constexpr double kAnomalousTolerance = 1e-18;   // dn/domega threshold, per rad/s
inline constexpr double kGroupIndexSingularity = 1e-9; // |n_g| below this maps to +-inf velocity

/// d(values)/d(omega) on a uniform grid: central differences inside,
/// second-order one-sided stencils at both ends. Needs >= 3 samples.
std::vector<double> omega_derivative(std::span<const double> values, const FrequencyGrid& grid);

/// Continuous phase of S21. The first sample is the principal value of
/// arg s21[0]; each step is wrapped into (-pi, pi]. The grid must be fine
/// enough that the true phase moves less than pi between samples.
RealSpectrum unwrap_phase(const TwoPortResponse& response);
RealSpectrum unwrap_phase(std::span<const cplx> samples, const FrequencyGrid& grid);

/// tau_g = -d phi / d omega (seconds).
RealSpectrum group_delay(const RealSpectrum& phase);

/// Phase-only retrieval n = -phi_unwrapped c / (omega d), no multiple reflections.
RealSpectrum effective_index(const TwoPortResponse& response, double thickness);

/// n_g = n + omega dn/domega.
RealSpectrum group_index(const RealSpectrum& index);

/// v_g = c / n_g; where |n_g| < 1e-9 the value is +inf or -inf (sign of n_g, +inf at 0).
RealSpectrum group_velocity(const RealSpectrum& group_index);

/// eps_eff = n^2.
RealSpectrum effective_permittivity(const RealSpectrum& index);

/// Maximal intervals with dn/domega < -tolerance; edges interpolated linearly
/// between samples where the derivative crosses -tolerance.
BandList anomalous_bands(const RealSpectrum& index, double tolerance = kAnomalousTolerance);

/// Every indicator extracted from one transmission spectrum.
struct DispersionIndicators {
  RealSpectrum phase;
  RealSpectrum group_delay;
  RealSpectrum effective_index;
  RealSpectrum group_index;
  RealSpectrum group_velocity;
  RealSpectrum effective_permittivity;
  BandList anomalous_bands;
};

DispersionIndicators analyze_dispersion(const TwoPortResponse& response, double thickness);

}  // namespace dma
