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

#include "quadrature.hpp"

namespace subcomp {

inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;  // 1/sqrt(2*pi)

double normal_pdf(double u);
double normal_cdf(double u);
/// Upper tail 1 - Phi(u), accurate for large u.
double normal_sf(double u);

/// Modified Bessel function of the second kind K_v(x) for order v in (0, 2)
/// and x > 0, evaluated through the integral representation
///   K_v(x) = int_0^inf exp(-x cosh t) cosh(v t) dt
/// with adaptive quadrature; the half-integer order v = 1/2 takes the
/// closed form sqrt(pi/(2x)) exp(-x).
double bessel_k(double v, double x, const QuadratureConfig& cfg = {});

/// The quadrature route of bessel_k without the half-integer fast path;
/// exists so the fast path can be cross-checked against it.
double bessel_k_integral(double v, double x, const QuadratureConfig& cfg = {});

/// Left-hand side of the identity
///   int_0^inf z^{-(1+v)} exp(-a^2 z/2 - b^2/(2z)) dz = 2 (a/b)^v K_v(ab),
/// computed by adaptive quadrature on the log axis.
double ts_integral_quadrature(double v, double a, double b,
                              const QuadratureConfig& cfg = {});

}  // namespace subcomp
