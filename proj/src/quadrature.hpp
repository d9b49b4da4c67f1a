// Copyright 2026 the subcomp authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcomp {

/// Tolerances and subdivision budget shared by all adaptive integrators.
struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 200;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw std::domain_error("QuadratureConfig: tolerances must be positive");
    if (max_subdivisions < 1)
      throw std::domain_error("QuadratureConfig: max_subdivisions must be >= 1");
  }
};

/// Thrown when the subdivision budget is exhausted before the error
/// estimate meets max(abs_tol, rel_tol * |integral|).
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 pair, positive abscissae (QUADPACK dqk15 constants).
inline constexpr double kGkNodes[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
inline constexpr double kGkWeights[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
inline constexpr double kGaussWeights[4] = {
    0.12948496616886969327, 0.27970539148927666790, 0.38183005050511894495,
    0.41795918367346938776};

struct Panel {
  double value;
  double error;
};

template <typename F>
Panel gk15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv[8][2];
  const double f0 = f(mid);
  fv[7][0] = f0;
  fv[7][1] = 0.0;

  double k15 = kGkWeights[7] * f0;
  double g7 = kGaussWeights[3] * f0;
  double resabs = kGkWeights[7] * std::fabs(f0);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGkNodes[i];
    const double fl = f(mid - dx);
    const double fr = f(mid + dx);
    fv[i][0] = fl;
    fv[i][1] = fr;
    k15 += kGkWeights[i] * (fl + fr);
    resabs += kGkWeights[i] * (std::fabs(fl) + std::fabs(fr));
    if (i % 2 == 1) g7 += kGaussWeights[(i - 1) / 2] * (fl + fr);
  }

  const double mean = 0.5 * k15;
  double resasc = kGkWeights[7] * std::fabs(f0 - mean);
  for (int i = 0; i < 7; ++i)
    resasc +=
        kGkWeights[i] * (std::fabs(fv[i][0] - mean) + std::fabs(fv[i][1] - mean));

  const double value = k15 * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);

  double err = std::fabs((k15 - g7) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  if (floor > err) err = floor;
  return {value, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b].
template <typename F>
IntegrationResult integrate(const F& f, double a, double b,
                            const QuadratureConfig& cfg = {}) {
  cfg.validate();
  if (a == b) return {};
  if (!(a < b)) throw std::invalid_argument("integrate: need a <= b");

  struct Piece {
    double a, b, value, error;
  };
  detail::Panel first = detail::gk15(f, a, b);
  std::vector<Piece> pieces{{a, b, first.value, first.error}};
  pieces.reserve(static_cast<std::size_t>(cfg.max_subdivisions) + 2);

  double total = first.value;
  double total_err = first.error;
  int splits = 0;
  const auto tolerance = [&] {
    return std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total));
  };

  while (total_err > tolerance() && splits < cfg.max_subdivisions) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < pieces.size(); ++i)
      if (pieces[i].error > pieces[worst].error) worst = i;
    const Piece p = pieces[worst];
    const double m = 0.5 * (p.a + p.b);
    if (!(p.a < m && m < p.b)) break;  // interval at machine resolution

    detail::Panel left = detail::gk15(f, p.a, m);
    detail::Panel right = detail::gk15(f, m, p.b);
    pieces[worst] = {p.a, m, left.value, left.error};
    pieces.push_back({m, p.b, right.value, right.error});
    ++splits;

    total = 0.0;
    total_err = 0.0;
    for (const Piece& q : pieces) {
      total += q.value;
      total_err += q.error;
    }
  }

  if (total_err > tolerance())
    throw QuadratureError(
        "adaptive quadrature did not converge: error estimate " +
        std::to_string(total_err) + " after " + std::to_string(splits) +
        " subdivisions (max " + std::to_string(cfg.max_subdivisions) + ")");
  return {total, total_err, splits};
}

/// Integrates f over (z_lo, z_hi) in the substitution z = exp(s), locating
/// the mass by a coarse scan around s_hint before the adaptive pass. Meant
/// for nonnegative integrands that are negligible outside a localized region
/// on the log axis (Levy-density-weighted Gaussian kernels and the like).
/// z_lo = 0 and z_hi = +inf leave the corresponding side unbounded.
template <typename F>
IntegrationResult integrate_log_axis(const F& f, double z_lo, double z_hi,
                                     double s_hint,
                                     const QuadratureConfig& cfg = {}) {
  cfg.validate();
  const double inf = std::numeric_limits<double>::infinity();
  const double s_min = z_lo > 0.0 ? std::log(z_lo) : -inf;
  const double s_max = std::isfinite(z_hi) ? std::log(z_hi) : inf;
  if (s_min >= s_max) return {};

  const auto h = [&f](double s) {
    const double z = std::exp(s);
    return f(z) * z;
  };
  const auto clamp = [&](double s) { return std::min(std::max(s, s_min), s_max); };

  double s_peak = clamp(s_hint);
  double h_peak = h(s_peak);
  for (int pass = 0; pass < 2; ++pass) {
    const double step = pass == 0 ? 1.0 : 5.0;
    const int reach = pass == 0 ? 60 : 70;
    for (int k = 1; k <= reach; ++k) {
      for (double sign : {-1.0, 1.0}) {
        const double s = clamp(s_hint) + sign * step * k;
        if (s < s_min || s > s_max) continue;
        const double v = h(s);
        if (v > h_peak) {
          h_peak = v;
          s_peak = s;
        }
      }
    }
    if (h_peak > 0.0) break;
  }
  if (!(h_peak > 0.0)) return {};  // integrand vanishes everywhere we looked

  const double cutoff = h_peak * 1e-20;
  double lo = s_peak;
  for (int k = 0; k < 400 && lo > s_min && h(lo) > cutoff; ++k)
    lo = std::max(s_min, lo - 2.0);
  double hi = s_peak;
  for (int k = 0; k < 400 && hi < s_max && h(hi) > cutoff; ++k)
    hi = std::min(s_max, hi + 2.0);

  IntegrationResult left =
      lo < s_peak ? integrate(h, lo, s_peak, cfg) : IntegrationResult{};
  IntegrationResult right =
      s_peak < hi ? integrate(h, s_peak, hi, cfg) : IntegrationResult{};
  return {left.value + right.value, left.error + right.error,
          left.subdivisions + right.subdivisions};
}

}  // namespace subcomp
