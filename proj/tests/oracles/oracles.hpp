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

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace dma::oracle {

using cd = std::complex<double>;
inline constexpr double c_light = 299792458.0;
inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Closed-form group delay of the bare shunt meta-atom.
/// S21 = 2 / (2 + y), y = j c0 F w^3 / (w0^2 - w^2 + j g w),
/// tau_g = -d arg S21 / dw = Im(y' / (2 + y)).
inline double shunt_group_delay(double w, double w0, double g, double f, double c0) {
  const cd den{w0 * w0 - w * w, g * w};
  const cd dden{-2.0 * w, g};
  const cd num = cd{0.0, c0 * f} * (w * w * w);
  const cd dnum = cd{0.0, c0 * f} * (3.0 * w * w);
  const cd y = num / den;
  const cd dy = (dnum * den - num * dden) / (den * den);
  return (dy / (2.0 + y)).imag();
}

/// Singular values by one-sided Jacobi rotations on the columns of A (m x n).
inline std::vector<double> jacobi_singular_values(std::vector<std::vector<cd>> a, int sweeps = 60) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  // work on columns
  std::vector<std::vector<cd>> col(n, std::vector<cd>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) col[j][i] = a[i][j];
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0;
        cd apq = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          app += std::norm(col[p][i]);
          aqq += std::norm(col[q][i]);
          apq += std::conj(col[p][i]) * col[q][i];
        }
        const double mag = std::abs(apq);
        if (mag == 0.0 || mag <= 1e-300) continue;
        off = std::max(off, mag / std::sqrt(std::max(app * aqq, 1e-300)));
        const cd phase = apq / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (std::size_t i = 0; i < m; ++i) {
          const cd xp = col[p][i];
          const cd xq = col[q][i] * std::conj(phase);
          col[p][i] = cs * xp - sn * xq;
          col[q][i] = (sn * xp + cs * xq) * phase;
        }
      }
    }
    if (off < 1e-15) break;
  }
  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (const cd& v : col[j]) acc += std::norm(v);
    s[j] = std::sqrt(acc);
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  s.resize(std::min(m, n));
  return s;
}

/// Solve A x = b by Gaussian elimination with partial pivoting.
inline std::vector<cd> gauss_solve(std::vector<std::vector<cd>> a, std::vector<cd> b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cd factor = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
      b[i] -= factor * b[k];
    }
  }
  std::vector<cd> x(n);
  for (std::size_t k = n; k-- > 0;) {
    cd acc = b[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= a[k][j] * x[j];
    x[k] = acc / a[k][k];
  }
  return x;
}

/// Tikhonov solution from the normal equations (H^H H + lambda I) x = H^H g.
inline std::vector<cd> tikhonov_normal_equations(const std::vector<std::vector<cd>>& h, const std::vector<cd>& g,
                                                 double lambda) {
  const std::size_t m = h.size();
  const std::size_t p = h[0].size();
  std::vector<std::vector<cd>> a(p, std::vector<cd>(p, 0.0));
  std::vector<cd> rhs(p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      cd acc = 0.0;
      for (std::size_t r = 0; r < m; ++r) acc += std::conj(h[r][i]) * h[r][j];
      a[i][j] = acc;
    }
    a[i][i] += lambda;
    for (std::size_t r = 0; r < m; ++r) rhs[i] += std::conj(h[r][i]) * g[r];
  }
  return gauss_solve(a, rhs);
}

/// Best |sum_n b_n z_n| over binary b by eight explicit nested loops.
struct NestedBest {
  std::uint64_t value;
  double gain;
};

inline NestedBest nested_loop_best8(const std::vector<cd>& z) {
  NestedBest best{0, -1.0};
  for (int b0 = 0; b0 < 2; ++b0)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int b3 = 0; b3 < 2; ++b3)
          for (int b4 = 0; b4 < 2; ++b4)
            for (int b5 = 0; b5 < 2; ++b5)
              for (int b6 = 0; b6 < 2; ++b6)
                for (int b7 = 0; b7 < 2; ++b7) {
                  const int bits[8] = {b0, b1, b2, b3, b4, b5, b6, b7};
                  cd acc = 0.0;
                  std::uint64_t v = 0;
                  for (int k = 0; k < 8; ++k) {
                    if (bits[k]) {
                      acc += z[static_cast<std::size_t>(k)];
                      v |= std::uint64_t{1} << k;
                    }
                  }
                  const double gain = std::abs(acc);
                  if (gain > best.gain || (gain == best.gain && v < best.value)) best = {v, gain};
                }
  return best;
}

}  // namespace dma::oracle
