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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dma/feedline.hpp"
#include "dma/meta_atom.hpp"
#include "dma/spectrum.hpp"

namespace dma {

/// Binary hologram: one on/off state per element, element 1 (nearest the feed) first.
class HologramCode {
 public:
  HologramCode() = default;
  explicit HologramCode(std::vector<std::uint8_t> bits);

  /// Parses an all-'0'/'1' string. Throws ConfigError otherwise.
  static HologramCode from_string(std::string_view text);
  /// Element n takes bit n of value (element 1 is the least significant bit).
  static HologramCode from_integer(std::uint64_t value, std::size_t n_elements);

  std::string to_string() const;
  std::uint64_t to_integer() const;

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  std::size_t active_count() const;
  bool is_zero() const { return active_count() == 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  /// Element-wise OR of equal-length codes.
  HologramCode operator|(const HologramCode& other) const;
  bool operator==(const HologramCode&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Uniform observation-angle grid in degrees.
struct AngleGrid {
  double start_deg = -90.0;
  double stop_deg = 90.0;
  double step_deg = 0.1;

  std::size_t size() const;
  double angle(std::size_t i) const;
  std::vector<double> angles() const;
  void validate() const;
};

struct ApertureConfig {
  std::size_t n_elements = 16;
  double spacing = 2.0e-3;
  LorentzianParams meta;
  SiwParams feed;  // positions must hold n_elements entries
  AngleGrid theta;
  std::optional<double> depletion;  ///< per-element coupling kappa of active elements; unset = off

  /// Defaults with feed positions laid out as n * spacing.
  static ApertureConfig uniform(std::size_t n_elements, double spacing);
  void validate() const;
};

enum class PatternNormalization { Absolute, Peak };

struct RadiationPattern {
  double frequency = 0.0;
  std::vector<double> theta_deg;
  std::vector<cplx> field;
  PatternNormalization normalization = PatternNormalization::Absolute;
};

struct BeamMetrics {
  double peak_angle = 0.0;      ///< deg
  double peak_magnitude = 0.0;  ///< linear |E|, parabola-refined
  double hpbw = 0.0;            ///< deg; NaN when a -3 dB crossing is missing on either side
  double sll = 0.0;             ///< dB relative to peak; -inf when there is no sidelobe
  double directivity_1d = 0.0;  ///< dB
};

/// m_n = w_n(omega) h_n(omega), w_n the on- or off-state element weight.
std::vector<cplx> element_moments(const ApertureConfig& config, const HologramCode& code, double omega);

/// E(theta) = sum_n m_n e^{+j k0 x_n sin theta} at arbitrary angles (deg).
std::vector<cplx> array_field(const ApertureConfig& config, std::span<const cplx> moments, double omega,
                              std::span<const double> angles_deg);

/// Far field on config.theta. Isotropic element factor, H-plane cut.
RadiationPattern far_field(const ApertureConfig& config, std::span<const cplx> moments, double omega);

/// Convenience: element_moments followed by far_field.
RadiationPattern code_pattern(const ApertureConfig& config, const HologramCode& code, double frequency);

RadiationPattern normalize_peak(const RadiationPattern& pattern);

/// Throws DomainError("no beam") for an identically zero pattern.
BeamMetrics beam_metrics(const RadiationPattern& pattern);

/// |<E1, E2>| / (|E1| |E2|) over a shared angle grid.
double pattern_correlation(const RadiationPattern& a, const RadiationPattern& b);

struct PortResponse {
  TwoPortResponse forward;        ///< s11, s21 (excitation at the feed port)
  std::vector<cplx> s12;
  std::vector<cplx> s22;
  RealSpectrum radiated_fraction; ///< sum over shunts of Re(y)|V|^2, per unit incident power
  RealSpectrum dielectric_loss;   ///< power dropped along the line sections
};

/// Cascade of the element shunts (state per code) separated by guide sections.
/// Reference planes sit at the first and last element.
PortResponse port_response(const ApertureConfig& config, const HologramCode& code, const FrequencyGrid& grid);

}  // namespace dma
