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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dma/aperture.hpp"
#include "dma/rng.hpp"

namespace dma {

/// 1D far-field angular reflectivity strip.
struct Scene {
  std::vector<double> pixel_angles_deg;
  std::vector<cplx> reflectivity;

  void validate() const;
};

/// One row of the sensing operator: the pattern radiated by (code, frequency).
struct MaskDescriptor {
  HologramCode code;
  double frequency;
};

/// H[m][p] = E(theta_p; code_m, f_m), one-way first-Born far-field model.
struct MeasurementMatrix {
  std::vector<MaskDescriptor> rows;
  std::vector<double> pixel_angles_deg;
  Eigen::MatrixXcd entries;

  Eigen::Index measurements() const { return entries.rows(); }
  Eigen::Index pixels() const { return entries.cols(); }
};

struct DiversityReport {
  std::vector<double> singular_values;  ///< descending
  std::size_t effective_rank = 0;       ///< count of s_k >= threshold * s_1
  double mean_row_correlation = 0.0;
  double condition_number = 0.0;        ///< s_1 / s_min over min(M, P) values; inf if s_min = 0
};

inline constexpr double kDefaultRankThreshold = 1e-3;
inline constexpr double kRankDeficiencyRatio = 1e-12;

/// Pixel centres uniformly spaced strictly inside (-90, 90):
/// theta_p = -90 + 180 (p + 1) / (count + 1).
std::vector<double> default_pixel_angles(std::size_t count);

/// The example codes followed by `n_random` distinct, non-zero seeded codes.
std::vector<HologramCode> ensemble_codes(std::size_t n_random, std::uint64_t seed, std::size_t n_elements = 16);

/// Distinct, non-zero codes drawn from raw generator output, skipping any in `exclude`.
std::vector<HologramCode> random_codes(std::size_t count, SeededRandom& rng, std::size_t n_elements,
                                       std::span<const HologramCode> exclude = {});

/// Rows ordered codes x frequencies, frequency fastest.
MeasurementMatrix build_measurement_matrix(const ApertureConfig& config, std::span<const HologramCode> codes,
                                           std::span<const double> frequencies,
                                           std::span<const double> pixel_angles_deg);

/// g = H sigma + n, n circular complex Gaussian with per-component std noise_sigma.
Eigen::VectorXcd forward_measure(const MeasurementMatrix& h, const Scene& scene, double noise_sigma,
                                 std::uint64_t seed);

enum class ColumnNormalization {
  Amplitude,  ///< divide by |H_p|: correlation score, argmax-consistent localization
  Energy,     ///< divide by |H_p|^2: unit gain for an isolated scatterer
};

struct MatchedFilterResult {
  Eigen::VectorXcd estimate;
  std::vector<Eigen::Index> zero_columns;  ///< pixels forced to 0
};

/// sigma_hat_p = H_p^H g / norm_p.
MatchedFilterResult reconstruct_matched_filter(const MeasurementMatrix& h, const Eigen::VectorXcd& g,
                                               ColumnNormalization norm = ColumnNormalization::Amplitude);

/// sigma_hat = (H^H H + lambda I)^{-1} H^H g via SVD filter factors s / (s^2 + lambda).
/// lambda = 0 needs s_min > 1e-12 s_1 and M >= P, otherwise DomainError("rank-deficient ...").
Eigen::VectorXcd reconstruct_tikhonov(const MeasurementMatrix& h, const Eigen::VectorXcd& g, double lambda);

struct SvdFactors {
  Eigen::MatrixXcd u;
  Eigen::VectorXd s;
  Eigen::MatrixXcd v;
};

/// Thin SVD, H = U diag(s) V^H.
SvdFactors svd(const Eigen::MatrixXcd& h);

DiversityReport diversity_metrics(const MeasurementMatrix& h, double rank_threshold = kDefaultRankThreshold);
DiversityReport diversity_metrics(const Eigen::MatrixXcd& h, double rank_threshold = kDefaultRankThreshold);

}  // namespace dma
