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

#include "compensator.hpp"

#include <algorithm>
#include <cmath>

#include "specfun.hpp"

namespace subcomp {

namespace {

inline double sgn_pos(double v) { return v < 0.0 ? -1.0 : 1.0; }

/// Log of the stationary point of z^{-(1+v)} exp(-lambda z - b^2/(2z)) on the
/// z axis; a robust hint for the quadrature scan.
double peak_hint(double b, const TemperedStableParams& params) {
  const double v = 0.5 + params.alpha;
  const double a2 = 2.0 * params.lambda;
  const double w = (std::sqrt(v * v + a2 * b * b) - v) / a2;
  return std::log(std::max(w, 1e-300));
}

}  // namespace

double theorem_density_quadrature(double x, double y,
                                  const TransitionKernel& kernel,
                                  const SubordinatorSpec& spec,
                                  const QuadratureConfig& cfg) {
  spec.validate();
  if (y == 0.0)
    throw std::domain_error("theorem_density_quadrature: y must be nonzero");
  const auto f = [&](double z) {
    return kernel.density(z, x, 0.0, x + y) * levy_density(z, spec.params);
  };
  return integrate_log_axis(f, 0.0, std::numeric_limits<double>::infinity(),
                            peak_hint(std::fabs(y), spec.params), cfg)
      .value;
}

double levy_subordination_density(
    double y, const std::function<double(double)>& levy_jump_density,
    const std::function<double(double, double)>& marginal_density,
    const SubordinatorSpec& spec, const QuadratureConfig& cfg) {
  spec.validate();
  if (y == 0.0)
    throw std::domain_error("levy_subordination_density: y must be nonzero");
  double drift_term = 0.0;
  if (spec.drift > 0.0 && levy_jump_density)
    drift_term = spec.drift * levy_jump_density(y);
  const auto f = [&](double z) {
    return marginal_density(z, y) * levy_density(z, spec.params);
  };
  return drift_term + integrate_log_axis(
                          f, 0.0, std::numeric_limits<double>::infinity(),
                          peak_hint(std::fabs(y), spec.params), cfg)
                          .value;
}

double subordinated_gaussian_profile(double u,
                                     const TemperedStableParams& params,
                                     const QuadratureConfig& cfg) {
  params.validate();
  if (!(u > 0.0))
    throw std::domain_error("subordinated_gaussian_profile: u must be > 0");
  const double v = 0.5 + params.alpha;
  const double root = std::sqrt(2.0 * params.lambda);
  const double arg = root * u;
  if (arg > 740.0) return 0.0;
  return 2.0 * params.c * kInvSqrt2Pi * std::pow(root / u, v) *
         bessel_k(v, arg, cfg);
}

double skew_ts_closed_form(double x, double y, const SkewParams& skew,
                           const TemperedStableParams& params,
                           const QuadratureConfig& cfg) {
  skew.validate();
  if (y == 0.0)
    throw std::domain_error("skew_ts_closed_form: y must be nonzero");
  const double sym = subordinated_gaussian_profile(std::fabs(y), params, cfg);
  if (skew.beta == 0.0) return sym;
  const double phi = std::fabs(x) + std::fabs(x + y);
  return sym + skew.beta * sgn_pos(x + y) *
                   subordinated_gaussian_profile(phi, params, cfg);
}

double skew_gamma_closed_form(double x, double y, const SkewParams& skew,
                              double c, double lambda) {
  skew.validate();
  if (!(c > 0.0) || !(lambda > 0.0))
    throw std::domain_error("skew_gamma_closed_form: c, lambda must be > 0");
  if (y == 0.0)
    throw std::domain_error("skew_gamma_closed_form: y must be nonzero");
  const double root = std::sqrt(2.0 * lambda);
  const double ay = std::fabs(y);
  double value = c * std::exp(-root * ay) / ay;
  if (skew.beta != 0.0) {
    const double phi = std::fabs(x) + std::fabs(x + y);
    value += skew.beta * sgn_pos(x + y) * c * std::exp(-root * phi) / phi;
  }
  return value;
}

double vg_levy_density(double y, double c, double lambda) {
  if (!(c > 0.0) || !(lambda > 0.0))
    throw std::domain_error("vg_levy_density: c, lambda must be > 0");
  if (y == 0.0) throw std::domain_error("vg_levy_density: y must be nonzero");
  const double ay = std::fabs(y);
  return c * std::exp(-std::sqrt(2.0 * lambda) * ay) / ay;
}

double profile_tail_integral(double s, const TemperedStableParams& params,
                             const QuadratureConfig& cfg) {
  params.validate();
  if (!(s > 0.0))
    throw std::domain_error("profile_tail_integral: s must be > 0");
  // G(s) ~ exp(-sqrt(2 lambda) s); track that scale in the tolerance.
  const double decay = std::min(std::sqrt(2.0 * params.lambda) * s, 700.0);
  QuadratureConfig scaled = cfg;
  scaled.abs_tol = std::max(cfg.abs_tol * std::exp(-decay), 1e-320);
  const auto f = [&](double z) {
    return normal_sf(s / std::sqrt(z)) * levy_density(z, params);
  };
  return integrate_log_axis(f, 0.0, std::numeric_limits<double>::infinity(),
                            peak_hint(s, params), scaled)
      .value;
}

TabulatedTailIntegral::TabulatedTailIntegral(
    const TemperedStableParams& params, double s_min, double s_max, int points,
    const QuadratureConfig& cfg)
    : params_(params), cfg_(cfg), s_min_(s_min), s_max_(s_max) {
  params_.validate();
  if (!(s_min > 0.0 && s_max > s_min))
    throw std::domain_error("TabulatedTailIntegral: need 0 < s_min < s_max");
  if (points < 8)
    throw std::domain_error("TabulatedTailIntegral: need at least 8 points");
  s_.resize(points);
  value_.resize(points);
  slope_.resize(points);
  log_s_min_ = std::log(s_min);
  step_ = (std::log(s_max) - log_s_min_) / (points - 1);
  for (int i = 0; i < points; ++i) {
    s_[i] = std::exp(log_s_min_ + step_ * i);
    value_[i] = profile_tail_integral(s_[i], params_, cfg_);
    slope_[i] = -subordinated_gaussian_profile(s_[i], params_, cfg_);
  }
  s_.back() = s_max;
}

double TabulatedTailIntegral::operator()(double s) const {
  if (s >= s_max_) return 0.0;  // decayed below 1e-30 of the left edge
  if (s < s_min_) return profile_tail_integral(s, params_, cfg_);
  const double pos = (std::log(s) - log_s_min_) / step_;
  std::size_t i = static_cast<std::size_t>(pos);
  if (i >= s_.size() - 1) i = s_.size() - 2;
  const double h = s_[i + 1] - s_[i];
  const double t = std::clamp((s - s_[i]) / h, 0.0, 1.0);
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * value_[i] + (t3 - 2 * t2 + t) * h * slope_[i] +
         (-2 * t3 + 3 * t2) * value_[i + 1] + (t3 - t2) * h * slope_[i + 1];
}

JumpWindow::JumpWindow(std::vector<std::pair<double, double>> intervals)
    : intervals_(std::move(intervals)) {
  std::sort(intervals_.begin(), intervals_.end());
  double prev_hi = -std::numeric_limits<double>::infinity();
  for (const auto& [lo, hi] : intervals_) {
    if (!(lo < hi))
      throw std::domain_error("JumpWindow: intervals need lo < hi");
    if (!(lo > 0.0 || hi < 0.0))
      throw std::domain_error(
          "JumpWindow: each interval must exclude 0 with positive margin");
    if (lo < prev_hi)
      throw std::domain_error("JumpWindow: intervals must be disjoint");
    prev_hi = hi;
  }
}

bool JumpWindow::contains(double y) const {
  for (const auto& [lo, hi] : intervals_)
    if (y >= lo && y <= hi) return true;
  return false;
}

double JumpWindow::min_distance_to_zero() const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& [lo, hi] : intervals_)
    d = std::min(d, lo > 0.0 ? lo : -hi);
  return d;
}

namespace {

/// int over [p, q] of sgn(w) g(|x| + |w|) dw for a segment not straddling 0:
/// equals G(|x| + |p|) - G(|x| + |q|) on either side of the origin.
double shifted_segment(double ax, double p, double q, const TailIntegral& G) {
  const double lo = std::isfinite(p) ? ax + std::fabs(p)
                                     : std::numeric_limits<double>::infinity();
  const double hi = std::isfinite(q) ? ax + std::fabs(q)
                                     : std::numeric_limits<double>::infinity();
  const double g_lo = std::isfinite(lo) ? G(lo) : 0.0;
  const double g_hi = std::isfinite(hi) ? G(hi) : 0.0;
  return g_lo - g_hi;
}

}  // namespace

double window_rate_skew(double x, const JumpWindow& window, double beta,
                        const TailIntegral& tail) {
  double total = 0.0;
  for (const auto& [lo, hi] : window.intervals()) {
    // symmetric part int g(|y|) dy
    if (lo > 0.0) {
      total += tail(lo) - (std::isfinite(hi) ? tail(hi) : 0.0);
    } else {
      total += tail(-hi) - (std::isfinite(lo) ? tail(-lo) : 0.0);
    }
    if (beta == 0.0) continue;
    // skew part: substitute w = x + y and split at w = 0
    const double ax = std::fabs(x);
    const double w1 = lo + x;  // -inf stays -inf
    const double w2 = hi + x;
    double skew_mass = 0.0;
    if (w2 <= 0.0 || w1 >= 0.0) {
      skew_mass = shifted_segment(ax, w1, w2, tail);
    } else {
      skew_mass = shifted_segment(ax, w1, 0.0, tail) +
                  shifted_segment(ax, 0.0, w2, tail);
    }
    total += beta * skew_mass;
  }
  return total;
}

double window_gaussian_mass(const JumpWindow& window, double sigma) {
  if (!(sigma > 0.0))
    throw std::domain_error("window_gaussian_mass: sigma must be > 0");
  double mass = 0.0;
  for (const auto& [lo, hi] : window.intervals()) {
    const double f_hi = std::isfinite(hi) ? normal_cdf(hi / sigma) : 1.0;
    const double f_lo = std::isfinite(lo) ? normal_cdf(lo / sigma) : 0.0;
    mass += f_hi - f_lo;
  }
  return mass;
}

double window_rate_cp(const JumpWindow& window,
                      const CompoundPoissonParams& cp,
                      const TemperedStableParams& params,
                      const QuadratureConfig& cfg) {
  cp.validate();
  params.validate();
  if (window.empty()) return 0.0;
  const auto mixture_mass = [&](double z) {
    const double mean = cp.rate * z;
    double weight = std::exp(-mean);
    double acc = 0.0;
    for (int n = 1; n <= 4000; ++n) {
      weight *= mean / n;
      acc += weight *
             window_gaussian_mass(window,
                                  cp.jump_std * std::sqrt(static_cast<double>(n)));
      if (n > mean) {
        const double ratio = mean / (n + 1);
        if (weight * ratio / (1.0 - ratio) < 1e-14 * (acc + 1e-300)) break;
      }
    }
    return acc;
  };
  const auto f = [&](double z) {
    return mixture_mass(z) * levy_density(z, params);
  };
  // Mass sits near z ~ (1 - alpha)/lambda on the log axis.
  const double hint = std::log((1.0 - params.alpha) / params.lambda);
  return integrate_log_axis(f, 0.0, std::numeric_limits<double>::infinity(),
                            hint, cfg)
      .value;
}

SkewTsCompensator::SkewTsCompensator(SkewParams skew,
                                     TemperedStableParams params)
    : skew_(skew), params_(params) {
  skew_.validate();
  params_.validate();
}

double SkewTsCompensator::rate(double t, double x, double y) const {
  (void)t;  // time-independent
  return skew_ts_closed_form(x, y, skew_, params_);
}

QuadratureCompensator::QuadratureCompensator(
    std::shared_ptr<const TransitionKernel> kernel, SubordinatorSpec spec,
    QuadratureConfig cfg)
    : kernel_(std::move(kernel)), spec_(spec), cfg_(cfg) {
  spec_.validate();
}

double QuadratureCompensator::rate(double t, double x, double y) const {
  (void)t;
  return theorem_density_quadrature(x, y, *kernel_, spec_, cfg_);
}

bool QuadratureCompensator::is_deterministic() const {
  return kernel_->is_spatially_homogeneous();
}

std::function<double(double)> QuadratureCompensator::first_term_rate() const {
  auto jump_density = kernel_->levy_jump_density();
  if (!jump_density || spec_.drift == 0.0) return {};
  const double gamma = spec_.drift;
  return [gamma, jump_density](double y) { return gamma * jump_density(y); };
}

}  // namespace subcomp
