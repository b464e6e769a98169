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

#include "dma/feedline.hpp"

#include <cmath>
#include <string>

#include "dma/errors.hpp"

namespace dma {

std::vector<double> uniform_positions(std::size_t count, double spacing) {
  std::vector<double> x(count);
  for (std::size_t n = 0; n < count; ++n) x[n] = static_cast<double>(n) * spacing;
  return x;
}

double SiwParams::effective_width() const {
  return kSpeedOfLight / (2.0 * f_cutoff * std::sqrt(eps_r));
}

void SiwParams::validate() const {
  require(std::isfinite(eps_r) && eps_r >= 1.0, "feed eps_r must be >= 1");
  require(std::isfinite(tan_delta) && tan_delta >= 0.0, "feed tan_delta must be >= 0");
  require(std::isfinite(f_cutoff) && f_cutoff > 0.0, "feed f_cutoff must be > 0");
  for (std::size_t n = 0; n < positions.size(); ++n) {
    require(std::isfinite(positions[n]) && positions[n] >= 0.0, "element positions must be >= 0");
    if (n > 0) require(positions[n] > positions[n - 1], "element positions must be strictly increasing");
  }
}

cplx guided_wavenumber(const SiwParams& params, double omega) {
  const double f = omega / kTwoPi;
  if (!(f > params.f_cutoff)) {
    throw DomainError("below cutoff: f = " + std::to_string(f) + " Hz <= f_cutoff = " +
                      std::to_string(params.f_cutoff) + " Hz");
  }
  // sqrt(eps_r) * sqrt(k0^2 - kc^2), factored to keep precision near cutoff
  const double k0 = omega / kSpeedOfLight;
  const double kc = kTwoPi * params.f_cutoff / kSpeedOfLight;
  const double beta = std::sqrt(params.eps_r) * std::sqrt((k0 - kc) * (k0 + kc));
  const double attenuation = beta * params.tan_delta / 2.0;
  return {beta, -attenuation};
}

cplx segment_factor(const SiwParams& params, double omega, double length) {
  return std::exp(-kJ * guided_wavenumber(params, omega) * length);
}

FeedExcitation feed_field(const SiwParams& params, double omega,
                          std::optional<std::span<const double>> coupling) {
  params.validate();
  const std::size_t n = params.positions.size();
  if (coupling) {
    require(coupling->size() == n, "coupling vector length must equal element count");
    for (double k : *coupling) {
      require(std::isfinite(k) && k >= 0.0 && k < 1.0, "coupling kappa must lie in [0, 1)");
    }
  }

  const cplx beta = guided_wavenumber(params, omega);
  FeedExcitation out{omega, std::vector<cplx>(n), {0.0, 0.0}};
  double remaining = 1.0;  // amplitude factor prod sqrt(1 - kappa)
  for (std::size_t i = 0; i < n; ++i) {
    out.amplitudes[i] = remaining * std::exp(-kJ * beta * params.positions[i]);
    if (coupling) remaining *= std::sqrt(1.0 - (*coupling)[i]);
  }
  if (n > 0) out.residual = remaining * std::exp(-kJ * beta * params.positions.back());
  return out;
}

}  // namespace dma
