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

#include "dma/holography.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>

#include "dma/errors.hpp"

namespace dma {

namespace {

void validate_target(const ApertureConfig& config, const SteeringTarget& target) {
  require(std::isfinite(target.theta_deg) && std::abs(target.theta_deg) < 90.0,
          "steering angle must satisfy |theta| < 90 deg");
  require(target.frequency > config.feed.f_cutoff, "below cutoff: steering frequency must exceed f_cutoff");
}

// Per-element contributions to E(theta_t) for the on and off states, with the
// undepleted feed. The field of a code is the sum of one entry per element.
struct ElementContributions {
  std::vector<cplx> on;
  std::vector<cplx> off;
};

ElementContributions contributions(const ApertureConfig& config, const SteeringTarget& target) {
  const double omega = kTwoPi * target.frequency;
  const FeedExcitation feed = feed_field(config.feed, omega);
  const cplx w_on = radiating_strength(config.meta, AtomState::On, omega);
  const cplx w_off = radiating_strength(config.meta, AtomState::Off, omega);
  const double u = omega / kSpeedOfLight * std::sin(deg_to_rad(target.theta_deg));
  ElementContributions c{std::vector<cplx>(config.n_elements), std::vector<cplx>(config.n_elements)};
  for (std::size_t n = 0; n < config.n_elements; ++n) {
    const cplx steer = feed.amplitudes[n] * std::polar(1.0, u * config.feed.positions[n]);
    c.on[n] = w_on * steer;
    c.off[n] = w_off * steer;
  }
  return c;
}

struct Candidate {
  std::uint64_t value = 0;
  double gain = -1.0;
};

bool better(const Candidate& a, const Candidate& b) {
  return a.gain > b.gain || (a.gain == b.gain && a.value < b.value);
}

}  // namespace

const std::vector<HologramCode>& example_codes() {
  static const std::vector<HologramCode> codes = {
      HologramCode::from_string("1010101010101010"),  // period 2d
      HologramCode::from_string("1100110011001100"),  // period 4d, paired
      HologramCode::from_string("1000100010001000"),  // period 4d, sparse
      HologramCode::from_string("1110111011101110"),  // period 4d, dense
      HologramCode::from_string("1111000011110000"),  // period 8d
      HologramCode::from_string("1001011001101001"),  // Thue-Morse
  };
  return codes;
}

HologramCode synthesize_code(const ApertureConfig& config, const SteeringTarget& target) {
  config.validate();
  validate_target(config, target);
  const double omega = kTwoPi * target.frequency;
  const double beta = guided_wavenumber(config.feed, omega).real();
  const double u = omega / kSpeedOfLight * std::sin(deg_to_rad(target.theta_deg));
  std::vector<std::uint8_t> bits(config.n_elements);
  for (std::size_t n = 0; n < config.n_elements; ++n) {
    const double x = config.feed.positions[n];
    const cplx reference = std::polar(1.0, -beta * x);
    const cplx object = std::polar(1.0, -u * x);
    bits[n] = (std::conj(reference) * object).real() >= 0.0 ? 1 : 0;
  }
  return HologramCode(std::move(bits));
}

double field_gain(const ApertureConfig& config, const HologramCode& code, const SteeringTarget& target) {
  validate_target(config, target);
  const double omega = kTwoPi * target.frequency;
  const std::vector<cplx> m = element_moments(config, code, omega);
  const double angle[] = {target.theta_deg};
  return std::abs(array_field(config, m, omega, angle)[0]);
}

OracleResult exhaustive_best_code(const ApertureConfig& config, const SteeringTarget& target, unsigned threads) {
  config.validate();
  validate_target(config, target);
  const std::size_t n = config.n_elements;
  if (n > kMaxExhaustiveElements) {
    throw DomainError("exhaustive search refused: " + std::to_string(n) + " elements exceeds the limit of " +
                      std::to_string(kMaxExhaustiveElements));
  }
  const std::uint64_t total = std::uint64_t{1} << n;

  // Linear superposition path; depletion makes the feed code-dependent, so
  // that case evaluates every code through the full moment model.
  const ElementContributions c = contributions(config, target);
  auto evaluate = [&](std::uint64_t value) {
    if (config.depletion) return field_gain(config, HologramCode::from_integer(value, n), target);
    cplx sum{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) sum += ((value >> k) & 1U) ? c.on[k] : c.off[k];
    return std::abs(sum);
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  std::vector<Candidate> best(threads);
  auto worker = [&](unsigned t) {
    const std::uint64_t lo = total * t / threads;
    const std::uint64_t hi = total * (t + 1) / threads;
    Candidate local;
    for (std::uint64_t v = lo; v < hi; ++v) {
      const Candidate cand{v, evaluate(v)};
      if (better(cand, local)) local = cand;
    }
    best[t] = local;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  Candidate winner;
  for (const Candidate& cand : best) {
    if (better(cand, winner)) winner = cand;
  }
  return {HologramCode::from_integer(winner.value, n), winner.gain};
}

ScanResult frequency_scan(const ApertureConfig& config, const HologramCode& code,
                          std::span<const double> frequencies) {
  config.validate();
  require(!frequencies.empty(), "frequency scan needs at least one frequency");
  require(code.size() == config.n_elements, "code length does not match element count");
  require(!code.is_zero(), "no beam: all-zero code");
  for (std::size_t i = 1; i < frequencies.size(); ++i) {
    require(frequencies[i] > frequencies[i - 1], "scan frequencies must be strictly increasing");
  }
  ScanResult out{code, {}};
  out.rows.reserve(frequencies.size());
  for (double f : frequencies) out.rows.push_back({f, beam_metrics(code_pattern(config, code, f))});
  return out;
}

double HybridTable::peak_span() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& row : cells) {
    for (const auto& m : row) {
      lo = std::min(lo, m.peak_angle);
      hi = std::max(hi, m.peak_angle);
    }
  }
  return hi - lo;
}

double HybridTable::row_span(std::size_t code_index) const {
  const auto& row = cells.at(code_index);
  const auto [lo, hi] = std::minmax_element(row.begin(), row.end(), [](const BeamMetrics& a, const BeamMetrics& b) {
    return a.peak_angle < b.peak_angle;
  });
  return hi->peak_angle - lo->peak_angle;
}

HybridTable hybrid_diversity_table(const ApertureConfig& config, std::span<const HologramCode> codes,
                                   std::span<const double> frequencies) {
  require(!codes.empty() && !frequencies.empty(), "hybrid table needs at least one code and one frequency");
  HybridTable table{{codes.begin(), codes.end()}, {frequencies.begin(), frequencies.end()}, {}};
  table.cells.reserve(codes.size());
  for (const HologramCode& code : codes) {
    const ScanResult scan = frequency_scan(config, code, frequencies);
    std::vector<BeamMetrics> row;
    row.reserve(scan.rows.size());
    for (const ScanRow& r : scan.rows) row.push_back(r.metrics);
    table.cells.push_back(std::move(row));
  }
  return table;
}

}  // namespace dma
