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

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "levy_models.hpp"
#include "markov.hpp"

namespace subcomp {

/// State-dependent jump-rate density of the time-changed process: rate(t, x, y)
/// is the Lebesgue density in the jump size y (y != 0) of the compensator when
/// the pre-jump state is x, per unit of wall-clock time. first_term_rate, when
/// present, is the density gamma * F(y) multiplied by dt through the continuous
/// part dZ^c_t = gamma dt (only Levy kernels with jumps contribute it).
class CompensatorDensity {
 public:
  virtual ~CompensatorDensity() = default;

  virtual double rate(double t, double x, double y) const = 0;
  virtual bool is_deterministic() const = 0;
  virtual std::function<double(double)> first_term_rate() const { return {}; }
};

/// Second-term density of the subordinated compensator by quadrature:
///   k(x, y) = int_0^inf kernel.density(z, x, x + y) nu(z) dz,  y != 0.
double theorem_density_quadrature(double x, double y,
                                  const TransitionKernel& kernel,
                                  const SubordinatorSpec& spec,
                                  const QuadratureConfig& cfg = {});

/// Classical Levy-subordination density for a Levy process X:
///   gamma * levy_jump_density(y) + int_0^inf marginal_density(z, y) nu(z) dz,
/// where marginal_density(z, .) is the density of X_z - X_0 and gamma is the
/// subordinator drift. Pass an empty levy_jump_density for continuous X.
double levy_subordination_density(
    double y, const std::function<double(double)>& levy_jump_density,
    const std::function<double(double, double)>& marginal_density,
    const SubordinatorSpec& spec, const QuadratureConfig& cfg = {});

/// Radial profile of the skew/tempered-stable compensator:
///   g(u) = (2c/sqrt(2 pi)) (sqrt(2 lambda)/u)^{1/2+alpha}
///          K_{1/2+alpha}(sqrt(2 lambda) u),  u > 0.
double subordinated_gaussian_profile(double u,
                                     const TemperedStableParams& params,
                                     const QuadratureConfig& cfg = {});

/// Closed form for skew Brownian X and tempered-stable Z:
///   k(x, y) = g(|y|) + beta sgn(x+y) g(|x| + |x+y|).
double skew_ts_closed_form(double x, double y, const SkewParams& skew,
                           const TemperedStableParams& params,
                           const QuadratureConfig& cfg = {});

/// Gamma-subordinator (alpha = 0) specialization:
///   c e^{-sqrt(2 lambda)|y|}/|y| + beta sgn(x+y) c e^{-sqrt(2 lambda) phi}/phi,
/// phi = |x| + |x+y|.
double skew_gamma_closed_form(double x, double y, const SkewParams& skew,
                              double c, double lambda);

/// Variance Gamma Levy density c e^{-sqrt(2 lambda)|y|} / |y|.
double vg_levy_density(double y, double c, double lambda);

/// Tail integral G(s) = int_s^inf g(u) du, evaluated as
/// int_0^inf (1 - Phi(s/sqrt(z))) nu(z) dz by adaptive quadrature.
double profile_tail_integral(double s, const TemperedStableParams& params,
                             const QuadratureConfig& cfg = {});

class TailIntegral {
 public:
  virtual ~TailIntegral() = default;
  virtual double operator()(double s) const = 0;
};

/// G(s) by direct quadrature on every call.
class DirectTailIntegral final : public TailIntegral {
 public:
  DirectTailIntegral(TemperedStableParams params, QuadratureConfig cfg = {})
      : params_(params), cfg_(cfg) {}
  double operator()(double s) const override {
    return profile_tail_integral(s, params_, cfg_);
  }

 private:
  TemperedStableParams params_;
  QuadratureConfig cfg_;
};

/// Precomputed G on a log-spaced grid with cubic Hermite interpolation
/// (slopes are -g, known in closed form). Queries left of the grid fall back
/// to direct quadrature; right of the grid G has decayed below 1e-30 of the
/// left edge and is treated as 0.
class TabulatedTailIntegral final : public TailIntegral {
 public:
  TabulatedTailIntegral(const TemperedStableParams& params, double s_min,
                        double s_max, int points = 2048,
                        const QuadratureConfig& cfg = {});
  double operator()(double s) const override;

 private:
  TemperedStableParams params_;
  QuadratureConfig cfg_;
  double s_min_, s_max_, log_s_min_, step_;
  std::vector<double> s_, value_, slope_;
};

/// A finite union of closed intervals bounded away from 0 (the jump window B).
/// Intervals must be disjoint and ordered; +-inf endpoints are allowed.
class JumpWindow {
 public:
  JumpWindow() = default;
  explicit JumpWindow(std::vector<std::pair<double, double>> intervals);

  const std::vector<std::pair<double, double>>& intervals() const {
    return intervals_;
  }
  bool empty() const { return intervals_.empty(); }
  bool contains(double y) const;
  /// min distance of B to 0; +inf for the empty window.
  double min_distance_to_zero() const;

 private:
  std::vector<std::pair<double, double>> intervals_;
};

/// int_B k(x, y) dy for the skew/tempered-stable compensator, assembled from
/// differences of the tail integral G (substituting w = x + y reduces the
/// skew term to G evaluations at |x| + |endpoint| with the sign of w).
double window_rate_skew(double x, const JumpWindow& window, double beta,
                        const TailIntegral& tail);

/// P(N(0, sigma^2) in B).
double window_gaussian_mass(const JumpWindow& window, double sigma);

/// Jump-part predicted rate for compound-Poisson X:
///   int_0^inf sum_{n>=1} Pois(n; r z) P(N(0, n sigma^2) in B) nu(z) dz.
/// The drift term gamma * r * P(N(0, sigma^2) in B) is the caller's.
double window_rate_cp(const JumpWindow& window,
                      const CompoundPoissonParams& cp,
                      const TemperedStableParams& params,
                      const QuadratureConfig& cfg = {});

/// Closed-form compensator density object for skew Brownian X with a
/// tempered-stable Z (continuous X, so no first term).
class SkewTsCompensator final : public CompensatorDensity {
 public:
  SkewTsCompensator(SkewParams skew, TemperedStableParams params);
  double rate(double t, double x, double y) const override;
  bool is_deterministic() const override { return skew_.beta == 0.0; }

 private:
  SkewParams skew_;
  TemperedStableParams params_;
};

/// Quadrature-backed compensator density for an arbitrary kernel.
class QuadratureCompensator final : public CompensatorDensity {
 public:
  QuadratureCompensator(std::shared_ptr<const TransitionKernel> kernel,
                        SubordinatorSpec spec, QuadratureConfig cfg = {});
  double rate(double t, double x, double y) const override;
  bool is_deterministic() const override;
  std::function<double(double)> first_term_rate() const override;

 private:
  std::shared_ptr<const TransitionKernel> kernel_;
  SubordinatorSpec spec_;
  QuadratureConfig cfg_;
};

}  // namespace subcomp
