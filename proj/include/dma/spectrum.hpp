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

#include <cstddef>
#include <vector>

#include "dma/constants.hpp"

namespace dma {

/// Uniformly spaced frequency axis in Hz.
class FrequencyGrid {
 public:
  /// Throws DomainError unless 0 < f_start < f_stop and n_points >= 2.
  FrequencyGrid(double f_start, double f_stop, std::size_t n_points);

  double f_start() const { return f_start_; }
  double f_stop() const { return f_stop_; }
  std::size_t size() const { return n_points_; }
  double step() const { return (f_stop_ - f_start_) / static_cast<double>(n_points_ - 1); }

  double frequency(std::size_t i) const;
  double omega(std::size_t i) const { return kTwoPi * frequency(i); }
  double omega_step() const { return kTwoPi * step(); }

  std::vector<double> frequencies() const;
  std::vector<double> omegas() const;

  bool operator==(const FrequencyGrid&) const = default;

 private:
  double f_start_;
  double f_stop_;
  std::size_t n_points_;
};

/// Real quantity sampled on a frequency grid; units depend on the quantity.
struct RealSpectrum {
  FrequencyGrid grid;
  std::vector<double> values;
};

/// Complex reflection/transmission spectra of a two-port.
struct TwoPortResponse {
  FrequencyGrid grid;
  std::vector<cplx> s11;
  std::vector<cplx> s21;
};

}  // namespace dma
