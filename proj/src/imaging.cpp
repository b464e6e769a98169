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

#include "dma/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include <Eigen/SVD>

#include "dma/errors.hpp"
#include "dma/holography.hpp"

namespace dma {

namespace {

void validate_pixel_angles(std::span<const double> angles) {
  require(!angles.empty(), "scene needs at least one pixel");
  for (std::size_t i = 0; i < angles.size(); ++i) {
    require(std::isfinite(angles[i]) && std::abs(angles[i]) < 90.0, "pixel angles must lie within (-90, 90) deg");
    if (i > 0) require(angles[i] > angles[i - 1], "pixel angles must be strictly increasing");
  }
}

}  // namespace

void Scene::validate() const {
  require(pixel_angles_deg.size() == reflectivity.size(), "scene angles and reflectivity differ in length");
  validate_pixel_angles(pixel_angles_deg);
}

std::vector<double> default_pixel_angles(std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t p = 0; p < count; ++p) {
    out[p] = -90.0 + 180.0 * static_cast<double>(p + 1) / static_cast<double>(count + 1);
  }
  return out;
}

std::vector<HologramCode> random_codes(std::size_t count, SeededRandom& rng, std::size_t n_elements,
                                       std::span<const HologramCode> exclude) {
  require(n_elements >= 1 && n_elements <= 64, "random codes need 1..64 elements");
  const std::uint64_t mask = n_elements == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_elements) - 1;
  std::set<std::uint64_t> seen;
  for (const HologramCode& c : exclude) {
    if (c.size() == n_elements) seen.insert(c.to_integer());
  }
  const std::uint64_t available = mask - seen.size() + (seen.count(0) ? 1 : 0);
  require(count <= available, "not enough distinct non-zero codes for the requested ensemble");
  std::vector<HologramCode> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::uint64_t v = rng.bits() & mask;
    if (v == 0 || !seen.insert(v).second) continue;
    out.push_back(HologramCode::from_integer(v, n_elements));
  }
  return out;
}

std::vector<HologramCode> ensemble_codes(std::size_t n_random, std::uint64_t seed, std::size_t n_elements) {
  std::vector<HologramCode> codes;
  for (const HologramCode& c : example_codes()) {
    if (c.size() == n_elements) codes.push_back(c);
  }
  SeededRandom rng(seed);
  const std::vector<HologramCode> extra = random_codes(n_random, rng, n_elements, codes);
  codes.insert(codes.end(), extra.begin(), extra.end());
  return codes;
}

MeasurementMatrix build_measurement_matrix(const ApertureConfig& config, std::span<const HologramCode> codes,
                                           std::span<const double> frequencies,
                                           std::span<const double> pixel_angles_deg) {
  config.validate();
  require(!codes.empty() && !frequencies.empty(), "measurement matrix needs codes and frequencies");
  validate_pixel_angles(pixel_angles_deg);
  for (const HologramCode& c : codes) {
    require(!c.is_zero(), "all-zero code admitted to the measurement ensemble");
  }

  MeasurementMatrix h;
  h.pixel_angles_deg.assign(pixel_angles_deg.begin(), pixel_angles_deg.end());
  const auto m = static_cast<Eigen::Index>(codes.size() * frequencies.size());
  const auto p = static_cast<Eigen::Index>(pixel_angles_deg.size());
  h.entries.resize(m, p);
  h.rows.reserve(static_cast<std::size_t>(m));
  Eigen::Index row = 0;
  for (const HologramCode& code : codes) {
    for (double f : frequencies) {
      const double omega = kTwoPi * f;
      const std::vector<cplx> moments = element_moments(config, code, omega);
      const std::vector<cplx> field = array_field(config, moments, omega, pixel_angles_deg);
      for (Eigen::Index q = 0; q < p; ++q) h.entries(row, q) = field[static_cast<std::size_t>(q)];
      h.rows.push_back({code, f});
      ++row;
    }
  }
  return h;
}

Eigen::VectorXcd forward_measure(const MeasurementMatrix& h, const Scene& scene, double noise_sigma,
                                 std::uint64_t seed) {
  require(static_cast<Eigen::Index>(scene.reflectivity.size()) == h.pixels(),
          "scene has " + std::to_string(scene.reflectivity.size()) + " pixels, matrix expects " +
              std::to_string(h.pixels()));
  require(std::isfinite(noise_sigma) && noise_sigma >= 0.0, "noise sigma must be >= 0");
  const Eigen::Map<const Eigen::VectorXcd> sigma(scene.reflectivity.data(), h.pixels());
  Eigen::VectorXcd g = h.entries * sigma;
  if (noise_sigma > 0.0) {
    SeededRandom rng(seed);
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i) += noise_sigma * cplx{re, im};
    }
  }
  return g;
}

MatchedFilterResult reconstruct_matched_filter(const MeasurementMatrix& h, const Eigen::VectorXcd& g,
                                               ColumnNormalization norm) {
  require(g.size() == h.measurements(), "measurement vector length does not match the matrix");
  MatchedFilterResult out{h.entries.adjoint() * g, {}};
  for (Eigen::Index p = 0; p < h.pixels(); ++p) {
    const double energy = h.entries.col(p).squaredNorm();
    if (energy == 0.0) {
      out.estimate(p) = 0.0;
      out.zero_columns.push_back(p);
      continue;
    }
    out.estimate(p) /= norm == ColumnNormalization::Energy ? energy : std::sqrt(energy);
  }
  return out;
}

SvdFactors svd(const Eigen::MatrixXcd& h) {
  Eigen::BDCSVD<Eigen::MatrixXcd> dec(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

Eigen::VectorXcd reconstruct_tikhonov(const MeasurementMatrix& h, const Eigen::VectorXcd& g, double lambda) {
  require(g.size() == h.measurements(), "measurement vector length does not match the matrix");
  require(std::isfinite(lambda) && lambda >= 0.0, "Tikhonov lambda must be >= 0");
  const SvdFactors f = svd(h.entries);
  const Eigen::Index k = f.s.size();
  if (lambda == 0.0) {
    const bool deficient = h.measurements() < h.pixels() || k == 0 || !(f.s(k - 1) > kRankDeficiencyRatio * f.s(0));
    if (deficient) {
      throw DomainError("rank-deficient measurement matrix: lambda = 0 has no unique solution, use lambda > 0");
    }
  }
  Eigen::VectorXcd coeff = f.u.adjoint() * g;
  for (Eigen::Index i = 0; i < k; ++i) {
    const double s = f.s(i);
    const double denom = s * s + lambda;
    coeff(i) *= denom > 0.0 ? s / denom : 0.0;
  }
  return f.v * coeff;
}

DiversityReport diversity_metrics(const Eigen::MatrixXcd& h, double rank_threshold) {
  require(h.rows() >= 1 && h.cols() >= 1, "diversity metrics need a non-empty matrix");
  DiversityReport r;
  Eigen::BDCSVD<Eigen::MatrixXcd> dec(h);
  const Eigen::VectorXd& s = dec.singularValues();
  r.singular_values.assign(s.data(), s.data() + s.size());
  std::sort(r.singular_values.begin(), r.singular_values.end(), std::greater<>());
  const double s1 = r.singular_values.front();
  for (double v : r.singular_values) {
    if (s1 > 0.0 && v >= rank_threshold * s1) ++r.effective_rank;
  }
  const double smin = r.singular_values.back();
  r.condition_number = smin > 0.0 ? s1 / smin : std::numeric_limits<double>::infinity();

  const Eigen::Index m = h.rows();
  if (m >= 2) {
    Eigen::VectorXd norms = h.rowwise().norm();
    const Eigen::MatrixXcd gram = h * h.adjoint();
    double sum = 0.0;
    std::size_t pairs = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = i + 1; j < m; ++j) {
        const double denom = norms(i) * norms(j);
        sum += denom > 0.0 ? std::min(1.0, std::abs(gram(i, j)) / denom) : 0.0;
        ++pairs;
      }
    }
    r.mean_row_correlation = sum / static_cast<double>(pairs);
  }
  return r;
}

DiversityReport diversity_metrics(const MeasurementMatrix& h, double rank_threshold) {
  return diversity_metrics(h.entries, rank_threshold);
}

}  // namespace dma
