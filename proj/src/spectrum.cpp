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

#include "dma/spectrum.hpp"

#include <cmath>

#include "dma/errors.hpp"

namespace dma {

FrequencyGrid::FrequencyGrid(double f_start, double f_stop, std::size_t n_points)
    : f_start_(f_start), f_stop_(f_stop), n_points_(n_points) {
  require(std::isfinite(f_start) && std::isfinite(f_stop), "frequency grid bounds must be finite");
  require(f_start > 0.0, "frequency grid must start above 0 Hz");
  require(f_start < f_stop, "frequency grid requires f_start < f_stop");
  require(n_points >= 2, "frequency grid needs at least 2 points");
}

double FrequencyGrid::frequency(std::size_t i) const {
  if (i + 1 == n_points_) return f_stop_;
  return f_start_ + (f_stop_ - f_start_) * static_cast<double>(i) / static_cast<double>(n_points_ - 1);
}

std::vector<double> FrequencyGrid::frequencies() const {
  std::vector<double> out(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) out[i] = frequency(i);
  return out;
}

std::vector<double> FrequencyGrid::omegas() const {
  std::vector<double> out(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) out[i] = omega(i);
  return out;
}

}  // namespace dma
