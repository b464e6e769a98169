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

#include "dma/constants.hpp"
#include "dma/spectrum.hpp"

namespace dma {

enum class AtomState : std::uint8_t { Off = 0, On = 1 };

inline AtomState state_from_bit(bool bit) { return bit ? AtomState::On : AtomState::Off; }

/// Lorentzian meta-atom, on and off states.
///
/// Time convention is e^{+j omega t}. The polarizability is
///   alpha(omega) = F omega^2 / (omega0^2 - omega^2 + j gamma omega)
/// so Im alpha < 0 for every omega > 0 whenever F > 0.
struct LorentzianParams {
  double f0 = 60.0e9;                ///< on-state resonance (Hz)
  double gamma = kTwoPi * 1.5e9;     ///< damping rate (rad/s), shared by both states
  double coupling = 0.5;             ///< on-state coupling amplitude F
  std::optional<double> f0_off;      ///< off-state resonance (Hz); unset reuses f0
  double coupling_off = 0.0;         ///< off-state coupling; 0 means transparent
  std::optional<double> shunt_scale; ///< c0 in y = j c0 omega alpha; unset means gamma / omega0^2

  double omega0() const { return kTwoPi * f0; }
  double omega0_off() const { return kTwoPi * f0_off.value_or(f0); }
  double resolved_shunt_scale() const;

  /// Throws DomainError on f0 <= 0, gamma <= 0, negative couplings.
  void validate() const;
};

/// Normalized complex polarizability of the chosen state.
cplx polarizability(const LorentzianParams& params, double omega, AtomState state);

/// Normalized shunt admittance y = j c0 omega alpha(omega).
cplx shunt_admittance(const LorentzianParams& params, double omega, AtomState state);

/// Single meta-atom as a shunt element on a matched line:
/// S21 = 2 / (2 + y), S11 = -y / (2 + y). The model is symmetric, so S12 = S21.
TwoPortResponse shunt_s_params(const LorentzianParams& params, AtomState state, const FrequencyGrid& grid);

/// Weight an element contributes to the aperture superposition.
cplx radiating_strength(const LorentzianParams& params, AtomState state, double omega);

}  // namespace dma
