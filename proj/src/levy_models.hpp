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

#include <cstdint>
#include <vector>

#include "quadrature.hpp"
#include "rng.hpp"

namespace subcomp {

/// Parameters of the tempered-stable subordinator Levy density
///   nu(z) = c z^{-(1+alpha)} exp(-lambda z),  z > 0,
/// with c > 0, lambda > 0, alpha in [0, 1). alpha = 0 is the Gamma
/// subordinator.
struct TemperedStableParams {
  double c = 1.0;
  double lambda = 1.0;
  double alpha = 0.0;

  void validate() const;
  bool is_gamma() const { return alpha == 0.0; }
  /// Acceptance rates and jump-size table conditioning degrade as alpha
  /// approaches 1; callers surface this as a report warning.
  bool near_stability_limit() const { return alpha >= 0.95; }
};

/// The increasing time change Z: tempered-stable jumps above a truncation
/// threshold plus an optional continuous drift, so Z_t = drift * t + jumps
/// and the continuous part Z^c_t equals drift * t exactly.
struct SubordinatorSpec {
  TemperedStableParams params;
  double drift = 0.0;
  double truncation_eps = 1e-4;

  void validate() const;
};

/// One simulated path of Z: the retained jumps, enumerated.
struct SubordinatorPath {
  double horizon = 0.0;
  std::vector<double> jump_times;  // strictly increasing, in (0, horizon]
  std::vector<double> jump_sizes;  // each > truncation_eps
  double drift = 0.0;

  double value_at(double t) const;
};

/// nu(z) = c z^{-(1+alpha)} exp(-lambda z); domain error for z <= 0.
double levy_density(double z, const TemperedStableParams& params);

/// Laplace exponent psi(u) = int_0^inf (1 - e^{-uz}) nu(z) dz in closed form:
/// c log(1 + u/lambda) for alpha = 0, and
/// c Gamma(-alpha) (lambda^alpha - (lambda+u)^alpha) for alpha in (0, 1).
double laplace_exponent(double u, const TemperedStableParams& params);

/// Tail mass Lambda(eps) = int_eps^inf nu(z) dz by adaptive quadrature.
double levy_tail_mass(double eps, const TemperedStableParams& params,
                      const QuadratureConfig& cfg = {});

/// Exact Gamma-subordinator increment over dt (requires alpha = 0):
/// Gamma(shape = c dt, rate = lambda).
double sample_gamma_increment(double dt, const TemperedStableParams& params,
                              RngStream& rng);

struct TsSampleStats {
  std::uint64_t proposals = 0;
  std::uint64_t accepts = 0;
};

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact tempered-stable increment over dt for alpha in (0, 1): one-sided
/// alpha-stable proposals (Kanter's representation) thinned by exp(-lambda S).
/// Throws SamplingError with split-dt guidance when the analytic acceptance
/// probability exp(-dt c Gamma(1-alpha)/alpha lambda^alpha) falls below 1e-6.
double sample_ts_increment(double dt, const TemperedStableParams& params,
                           RngStream& rng, TsSampleStats* stats = nullptr);

/// Dispatches on alpha: Gamma sampler at alpha = 0, rejection sampler above.
double sample_subordinator_increment(double dt,
                                     const TemperedStableParams& params,
                                     RngStream& rng);

/// Inverse-CDF sampler for jump sizes above the truncation threshold:
/// a 4096-point log-spaced monotone table of the normalized tail CDF with
/// linear interpolation, plus a conditional-exponential patch for the
/// (< 1e-16 relative) mass beyond the table.
class JumpSizeTable {
 public:
  JumpSizeTable(const TemperedStableParams& params, double eps,
                const QuadratureConfig& cfg = {});

  double tail_mass() const { return tail_mass_; }  // Lambda(eps)
  double truncation_eps() const { return eps_; }
  double quantile(double u) const;
  double sample(RngStream& rng) const { return quantile(rng.uniform01()); }

 private:
  double eps_;
  double lambda_;
  double tail_mass_;
  double residual_;  // unnormalized mass beyond the last grid point
  std::vector<double> z_;
  std::vector<double> cdf_;
};

/// Marked-Poisson simulation of the retained jumps of Z over (0, T]:
/// count ~ Poisson(T Lambda(eps)), times uniform, sizes from the normalized
/// tail law. Jumps at or below eps are dropped; no compensating drift is
/// added. A shared table avoids rebuilding the inverse CDF per path.
SubordinatorPath sample_jump_path(double horizon, const SubordinatorSpec& spec,
                                  RngStream& rng,
                                  const JumpSizeTable* table = nullptr);

}  // namespace subcomp
