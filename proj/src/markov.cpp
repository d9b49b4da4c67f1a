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

#include "markov.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "specfun.hpp"

namespace subcomp {

namespace {

inline double sgn_pos(double v) { return v < 0.0 ? -1.0 : 1.0; }

/// Standard normal conditioned on exceeding a >= 0: plain rejection near the
/// bulk, Rayleigh-tail rejection (Marsaglia) further out.
double truncated_std_normal_above(double a, RngStream& rng) {
  if (a < 1.5) {
    for (;;) {
      const double z = rng.normal();
      if (z > a) return z;
    }
  }
  for (;;) {
    const double r = std::sqrt(a * a - 2.0 * std::log(rng.uniform_open()));
    if (rng.uniform01() * r < a) return r;
  }
}

double skew_sample_nonneg(double t, double x, double beta, RngStream& rng) {
  const double rt = std::sqrt(t);
  const double w = x + rt * rng.normal();
  if (w > 0.0) {
    // Bridge from x to w stays positive with probability 1 - exp(-2xw/t).
    const double keep = -std::expm1(-2.0 * x * w / t);
    if (rng.uniform01() < keep) return w;
  }
  // The path reached 0: endpoint magnitude has the law of (G - x | G > x),
  // G ~ N(0, t), and the final excursion sign is + with probability
  // (1 + beta)/2 independently of the magnitude.
  const double a = x / rt;
  const double m = (truncated_std_normal_above(a, rng) - a) * rt;
  const double sign = rng.uniform01() < 0.5 * (1.0 + beta) ? 1.0 : -1.0;
  return sign * m;
}

}  // namespace

void SkewParams::validate() const {
  if (!(beta >= -1.0 && beta <= 1.0))
    throw std::domain_error("SkewParams: beta must lie in [-1, 1]");
}

double skew_density(double t, double x, double y, const SkewParams& skew) {
  skew.validate();
  if (!(t > 0.0)) throw std::domain_error("skew_density: t must be > 0");
  const double rt = std::sqrt(t);
  const double sym = normal_pdf((y - x) / rt);
  const double refl = normal_pdf((std::fabs(y) + std::fabs(x)) / rt);
  return (sym + skew.beta * sgn_pos(y) * refl) / rt;
}

double skew_cdf(double t, double x, double y, const SkewParams& skew) {
  skew.validate();
  if (!(t > 0.0)) throw std::domain_error("skew_cdf: t must be > 0");
  const double rt = std::sqrt(t);
  const double ax = std::fabs(x);
  const double base = normal_cdf((y - x) / rt);
  if (y <= 0.0) return base - skew.beta * normal_cdf((y - ax) / rt);
  return base - skew.beta * normal_sf((y + ax) / rt);
}

// Exactness of the three-step sampler rests on the reflection identity
//   phi_t(w - x) exp(-2xw/t) = phi_t(w + x),
// which says a Brownian bridge from x > 0 to w > 0 reaches 0 with
// probability exp(-2xw/t). Splitting N(x, t) endpoints by that event:
//   stayed positive:  density phi_t(y-x) - phi_t(y+x) on y > 0;
//   reached zero:     density phi_t(|y|+x), i.e. magnitude (G - x | G > x).
// After the first zero the skew process restarts from 0, where its endpoint
// is a half-normal magnitude with sign + at probability (1+beta)/2. The two
// parts sum to phi_t(y-x) + beta sgn(y) phi_t(|y|+|x|), the skew kernel.
// For x < 0, sample from -x with skewness -beta and negate.
double skew_sample(double t, double x, const SkewParams& skew, RngStream& rng) {
  skew.validate();
  if (!(t > 0.0)) throw std::domain_error("skew_sample: t must be > 0");
  if (x < 0.0) return -skew_sample_nonneg(t, -x, -skew.beta, rng);
  return skew_sample_nonneg(t, x, skew.beta, rng);
}

void CompoundPoissonParams::validate() const {
  if (!(rate > 0.0))
    throw std::domain_error("CompoundPoissonParams: rate must be > 0");
  if (!(jump_std > 0.0))
    throw std::domain_error("CompoundPoissonParams: jump_std must be > 0");
}

double cp_sample(double t, double x, const CompoundPoissonParams& params,
                 RngStream& rng) {
  params.validate();
  if (!(t > 0.0)) throw std::domain_error("cp_sample: t must be > 0");
  const std::uint64_t n = rng.poisson(params.rate * t);
  if (n == 0) return x;
  // Sum of n iid centered Gaussians.
  return x + params.jump_std * std::sqrt(static_cast<double>(n)) * rng.normal();
}

double cp_marginal_density(double t, double dy,
                           const CompoundPoissonParams& params,
                           double rel_tol) {
  params.validate();
  if (!(t > 0.0)) throw std::domain_error("cp_marginal_density: t must be > 0");
  const double mean = params.rate * t;
  const double sigma = params.jump_std;
  double weight = std::exp(-mean);  // Poisson pmf at n, starting from n = 0
  double acc = 0.0;
  for (int n = 1; n <= 4000; ++n) {
    weight *= mean / n;
    const double sd = sigma * std::sqrt(static_cast<double>(n));
    acc += weight * normal_pdf(dy / sd) / sd;
    // Remaining terms are bounded by the Poisson tail times the largest
    // possible Gaussian peak 1/(sd sqrt(2 pi)).
    if (n > mean) {
      const double ratio = mean / (n + 1);
      const double bound = weight * ratio / (1.0 - ratio) * kInvSqrt2Pi / sigma;
      if (bound < rel_tol * (acc + 1e-300)) break;
    }
  }
  return acc;
}

double TransitionKernel::evolve_with_records(
    double op_time, double x, double t0, double t1, RngStream& rng,
    const std::function<void(double, double)>& record) const {
  (void)t1;
  (void)record;  // continuous kernels contribute no records
  if (op_time <= 0.0) return x;
  return sample(op_time, x, t0, rng);
}

SkewBrownianKernel::SkewBrownianKernel(SkewParams skew) : skew_(skew) {
  skew_.validate();
}

double SkewBrownianKernel::density(double t, double x, double s,
                                   double y) const {
  (void)s;  // time-homogeneous
  return skew_density(t, x, y, skew_);
}

double SkewBrownianKernel::sample(double t, double x, double s,
                                  RngStream& rng) const {
  (void)s;
  return skew_sample(t, x, skew_, rng);
}

CompoundPoissonKernel::CompoundPoissonKernel(CompoundPoissonParams params)
    : params_(params) {
  params_.validate();
}

double CompoundPoissonKernel::density(double t, double x, double s,
                                      double y) const {
  (void)s;
  return cp_marginal_density(t, y - x, params_);
}

double CompoundPoissonKernel::sample(double t, double x, double s,
                                     RngStream& rng) const {
  (void)s;
  return cp_sample(t, x, params_, rng);
}

std::function<double(double)> CompoundPoissonKernel::levy_jump_density() const {
  const double r = params_.rate;
  const double sigma = params_.jump_std;
  return [r, sigma](double y) { return r * normal_pdf(y / sigma) / sigma; };
}

double CompoundPoissonKernel::evolve_with_records(
    double op_time, double x, double t0, double t1, RngStream& rng,
    const std::function<void(double, double)>& record) const {
  if (op_time <= 0.0) return x;
  const std::uint64_t n = rng.poisson(params_.rate * op_time);
  if (n == 0) return x;
  std::vector<double> times(n);
  for (double& tj : times) tj = t0 + (t1 - t0) * rng.uniform_open();
  std::sort(times.begin(), times.end());
  for (double tj : times) {
    const double jump = params_.jump_std * rng.normal();
    if (record) record(tj, jump);
    x += jump;
  }
  return x;
}

}  // namespace subcomp
