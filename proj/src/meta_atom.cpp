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

#include "dma/meta_atom.hpp"

#include <cmath>

#include "dma/errors.hpp"

namespace dma {

double LorentzianParams::resolved_shunt_scale() const {
  if (shunt_scale) return *shunt_scale;
  const double w0 = omega0();
  return gamma / (w0 * w0);
}

void LorentzianParams::validate() const {
  require(std::isfinite(f0) && f0 > 0.0, "meta-atom f0 must be > 0");
  require(std::isfinite(gamma) && gamma > 0.0, "meta-atom gamma must be > 0");
  require(std::isfinite(coupling) && coupling >= 0.0, "meta-atom coupling must be >= 0");
  require(std::isfinite(coupling_off) && coupling_off >= 0.0, "meta-atom coupling_off must be >= 0");
  if (f0_off) require(std::isfinite(*f0_off) && *f0_off > 0.0, "meta-atom f0_off must be > 0");
  if (shunt_scale) require(std::isfinite(*shunt_scale) && *shunt_scale >= 0.0, "shunt scale must be >= 0");
}

cplx polarizability(const LorentzianParams& params, double omega, AtomState state) {
  require(std::isfinite(omega) && omega > 0.0, "polarizability requires omega > 0");
  const bool on = state == AtomState::On;
  const double strength = on ? params.coupling : params.coupling_off;
  if (strength == 0.0) return {0.0, 0.0};
  const double w0 = on ? params.omega0() : params.omega0_off();
  const cplx denominator{w0 * w0 - omega * omega, params.gamma * omega};
  return strength * omega * omega / denominator;
}

cplx shunt_admittance(const LorentzianParams& params, double omega, AtomState state) {
  return kJ * (params.resolved_shunt_scale() * omega) * polarizability(params, omega, state);
}

TwoPortResponse shunt_s_params(const LorentzianParams& params, AtomState state, const FrequencyGrid& grid) {
  params.validate();
  TwoPortResponse out{grid, std::vector<cplx>(grid.size()), std::vector<cplx>(grid.size())};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cplx y = shunt_admittance(params, grid.omega(i), state);
    const cplx denominator = 2.0 + y;
    out.s21[i] = 2.0 / denominator;
    out.s11[i] = -y / denominator;
  }
  return out;
}

cplx radiating_strength(const LorentzianParams& params, AtomState state, double omega) {
  return polarizability(params, omega, state);
}

}  // namespace dma
