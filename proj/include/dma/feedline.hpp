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

#include <optional>
#include <span>
#include <vector>

#include "dma/constants.hpp"

namespace dma {

std::vector<double> uniform_positions(std::size_t count, double spacing);

/// Substrate-integrated waveguide feed, TE10 mode, matched termination.
struct SiwParams {
  double eps_r = 3.0;
  double tan_delta = 0.001;
  double f_cutoff = 45.0e9;
  std::vector<double> positions = uniform_positions(16, 2.0e-3);  ///< element centres x_n (m)

  /// Equivalent empty-guide width c / (2 f_c sqrt(eps_r)).
  double effective_width() const;
  void validate() const;
};

/// Complex guided wavenumber beta' - j alpha_att (rad/m), so that
/// e^{-j beta x} both advances phase and attenuates.
///   beta'     = sqrt(eps_r k0^2 - (pi / a_eff)^2)
///   alpha_att = beta' tan_delta / 2
/// Throws DomainError at or below cutoff.
cplx guided_wavenumber(const SiwParams& params, double omega);

/// Propagation factor e^{-j beta length} over one guide segment.
cplx segment_factor(const SiwParams& params, double omega, double length);

/// Reference wave seen by each element.
struct FeedExcitation {
  double omega = 0.0;
  std::vector<cplx> amplitudes;  ///< h_n at each element
  cplx residual{0.0, 0.0};       ///< wave leaving the last element, after its coupling
};

/// h_n = e^{-j beta x_n} prod_{m<n} sqrt(1 - kappa_m). Without coupling the
/// product is 1. coupling, when given, must hold one kappa in [0, 1) per element.
FeedExcitation feed_field(const SiwParams& params, double omega,
                          std::optional<std::span<const double>> coupling = std::nullopt);

}  // namespace dma
