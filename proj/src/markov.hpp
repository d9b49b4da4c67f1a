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

#include "quadrature.hpp"
#include "rng.hpp"

namespace subcomp {

/// Skewness of the skew Brownian kernel; beta = 0 is standard Brownian
/// motion. Throughout, sgn(0) is taken as +1 (a measure-zero convention that
/// only pins down point evaluations).
struct SkewParams {
  double beta = 0.0;

  void validate() const;
};

/// Transition density of skew Brownian motion over elapsed time t:
///   (1/sqrt(2 pi t)) ( exp(-(y-x)^2/(2t)) + beta sgn(y) exp(-(|y|+|x|)^2/(2t)) ).
double skew_density(double t, double x, double y, const SkewParams& skew);

/// int_{-inf}^{y} skew_density(t, x, u) du through the normal CDF. Splitting
/// the density at u = 0 gives
///   y <= 0:  Phi((y-x)/rt) - beta Phi((y-|x|)/rt)
///   y >  0:  Phi((y-x)/rt) - beta (1 - Phi((y+|x|)/rt)),   rt = sqrt(t).
double skew_cdf(double t, double x, double y, const SkewParams& skew);

/// Exact draw from the skew Brownian transition law (no discretization).
double skew_sample(double t, double x, const SkewParams& skew, RngStream& rng);

/// Compound Poisson process: jump rate r, centered Gaussian jumps with
/// standard deviation jump_std. Its own jump compensator is
/// dt * rate * (Gaussian density with std jump_std)(y) dy.
struct CompoundPoissonParams {
  double rate = 1.0;
  double jump_std = 1.0;

  void validate() const;
};

/// x plus a Poisson(rate * t) number of centered Gaussian jumps.
double cp_sample(double t, double x, const CompoundPoissonParams& params,
                 RngStream& rng);

/// Density (in y) of the absolutely continuous part of the compound-Poisson
/// transition over time t, i.e. the Poisson-weighted Gaussian mixture over
/// jump counts n >= 1; the atom at y = x is excluded.
double cp_marginal_density(double t, double dy,
                           const CompoundPoissonParams& params,
                           double rel_tol = 1e-14);

/// A time-homogeneous Markov transition kernel. The second time argument s
/// (the absolute start time) is carried so the interface matches the
/// time-inhomogeneous kernel signature, but both implementations ignore it.
class TransitionKernel {
 public:
  virtual ~TransitionKernel() = default;

  /// Density in y of X_{s+t} given X_s = x; for kernels with an atom at
  /// y = x only the absolutely continuous part is reported.
  virtual double density(double t, double x, double s, double y) const = 0;
  virtual double sample(double t, double x, double s, RngStream& rng) const = 0;
  virtual bool is_continuous_paths() const = 0;
  /// True when density(t, x, s, y) depends on (t, y - x) only, which makes
  /// the subordinated compensator deterministic.
  virtual bool is_spatially_homogeneous() const = 0;
  /// Levy jump density F(y) of the process's own jumps, when it is a Levy
  /// process with jumps; empty otherwise.
  virtual std::function<double(double)> levy_jump_density() const { return {}; }
  /// Evolves the state over op_time of operative time, reporting the
  /// process's own jumps (wall-clock times in (t0, t1]) when it has any.
  virtual double evolve_with_records(
      double op_time, double x, double t0, double t1, RngStream& rng,
      const std::function<void(double, double)>& record) const;
};

class SkewBrownianKernel final : public TransitionKernel {
 public:
  explicit SkewBrownianKernel(SkewParams skew);

  double density(double t, double x, double s, double y) const override;
  double sample(double t, double x, double s, RngStream& rng) const override;
  bool is_continuous_paths() const override { return true; }
  bool is_spatially_homogeneous() const override { return skew_.beta == 0.0; }

  const SkewParams& skew() const { return skew_; }

 private:
  SkewParams skew_;
};

class CompoundPoissonKernel final : public TransitionKernel {
 public:
  explicit CompoundPoissonKernel(CompoundPoissonParams params);

  double density(double t, double x, double s, double y) const override;
  double sample(double t, double x, double s, RngStream& rng) const override;
  bool is_continuous_paths() const override { return false; }
  bool is_spatially_homogeneous() const override { return true; }
  std::function<double(double)> levy_jump_density() const override;
  double evolve_with_records(
      double op_time, double x, double t0, double t1, RngStream& rng,
      const std::function<void(double, double)>& record) const override;

  const CompoundPoissonParams& params() const { return params_; }

 private:
  CompoundPoissonParams params_;
};

}  // namespace subcomp
