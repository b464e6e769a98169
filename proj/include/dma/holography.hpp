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

#include "dma/aperture.hpp"

namespace dma {

struct SteeringTarget {
  double theta_deg = 0.0;  ///< object-beam direction, |theta| < 90
  double frequency = 60.0e9;
};

/// The six example codes shipped with the CLI (element 1 first).
const std::vector<HologramCode>& example_codes();

/// Binarized interference of the lossless reference wave with the object wave:
/// bit n is 1 iff Re[conj(h_n) e^{-j k0 x_n sin theta_t}] >= 0.
HologramCode synthesize_code(const ApertureConfig& config, const SteeringTarget& target);

/// |E(theta_t)| for one code.
double field_gain(const ApertureConfig& config, const HologramCode& code, const SteeringTarget& target);

struct OracleResult {
  HologramCode code;
  double gain = 0.0;
};

inline constexpr std::size_t kMaxExhaustiveElements = 24;

/// Best |E(theta_t)| over all 2^N codes; ties go to the smallest integer code.
/// threads = 0 picks hardware concurrency. The result does not depend on it.
OracleResult exhaustive_best_code(const ApertureConfig& config, const SteeringTarget& target,
                                  unsigned threads = 0);

struct ScanRow {
  double frequency;
  BeamMetrics metrics;
};

struct ScanResult {
  HologramCode code;
  std::vector<ScanRow> rows;
};

/// Beam metrics of one code over strictly increasing frequencies.
ScanResult frequency_scan(const ApertureConfig& config, const HologramCode& code,
                          std::span<const double> frequencies);

struct HybridTable {
  std::vector<HologramCode> codes;
  std::vector<double> frequencies;
  std::vector<std::vector<BeamMetrics>> cells;  ///< [code][frequency]

  /// max - min peak angle over all cells.
  double peak_span() const;
  /// max - min peak angle within one code row.
  double row_span(std::size_t code_index) const;
};

HybridTable hybrid_diversity_table(const ApertureConfig& config, std::span<const HologramCode> codes,
                                   std::span<const double> frequencies);

}  // namespace dma
