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

#include "specfun.hpp"

#include <cmath>

namespace subcomp {

double normal_pdf(double u) { return kInvSqrt2Pi * std::exp(-0.5 * u * u); }

double normal_cdf(double u) { return 0.5 * std::erfc(-u * M_SQRT1_2); }

double normal_sf(double u) { return 0.5 * std::erfc(u * M_SQRT1_2); }

double bessel_k(double v, double x, const QuadratureConfig& cfg) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be > 0");
  if (!(v > 0.0 && v < 2.0))
    throw std::domain_error("bessel_k: order must lie in (0, 2)");
  if (std::fabs(v - 0.5) < 1e-13)
    return std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
  return bessel_k_integral(v, x, cfg);
}

double bessel_k_integral(double v, double x, const QuadratureConfig& cfg) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be > 0");
  if (!(v > 0.0 && v < 2.0))
    throw std::domain_error("bessel_k: order must lie in (0, 2)");
  if (x > 740.0) return 0.0;  // exp(-x) below the subnormal range

  // K_v(x) ~ exp(-x): the absolute tolerance must track that scale or the
  // relative accuracy contract breaks for large x.
  QuadratureConfig scaled = cfg;
  scaled.abs_tol = std::max(cfg.abs_tol * std::exp(-x), 1e-320);

  // The integrand exp(-x cosh t) cosh(vt) peaks at t = 0 for x >= v and at
  // roughly arcsinh(v/x) otherwise; it is identically zero (in doubles) once
  // x cosh t exceeds ~750, which fixes the truncation point.
  const double t_end = std::acosh(std::max(2.0, 800.0 / x));
  const double t_split = std::min(std::asinh(v / x), 0.5 * t_end);
  const auto f = [v, x](double t) {
    return std::exp(-x * std::cosh(t)) * std::cosh(v * t);
  };
  const IntegrationResult head =
      t_split > 0.0 ? integrate(f, 0.0, t_split, scaled) : IntegrationResult{};
  const IntegrationResult tail = integrate(f, t_split, t_end, scaled);
  return head.value + tail.value;
}

double ts_integral_quadrature(double v, double a, double b,
                              const QuadratureConfig& cfg) {
  if (!(v > 0.0 && v < 2.0))
    throw std::domain_error("ts_integral_quadrature: order must lie in (0, 2)");
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("ts_integral_quadrature: a and b must be > 0");

  // The integral equals 2 (a/b)^v K_v(ab) ~ exp(-ab); keep the absolute
  // tolerance on that scale so relative accuracy survives large ab.
  QuadratureConfig scaled = cfg;
  scaled.abs_tol = std::max(cfg.abs_tol * std::exp(-std::min(a * b, 700.0)),
                            1e-320);

  // Stationary point of -v s - a^2 e^s / 2 - b^2 e^{-s} / 2.
  const double peak = (std::sqrt(v * v + a * a * b * b) - v) / (a * a);
  const auto f = [v, a, b](double z) {
    return std::pow(z, -(1.0 + v)) *
           std::exp(-0.5 * a * a * z - 0.5 * b * b / z);
  };
  return integrate_log_axis(f, 0.0, std::numeric_limits<double>::infinity(),
                            std::log(peak), scaled)
      .value;
}

}  // namespace subcomp
