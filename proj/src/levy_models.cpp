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

#include "levy_models.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace subcomp {

namespace {
constexpr double kMinTsAcceptance = 1e-6;
constexpr int kJumpTablePoints = 4096;
}  // namespace

void TemperedStableParams::validate() const {
  if (!(c > 0.0)) throw std::domain_error("TemperedStableParams: c must be > 0");
  if (!(lambda > 0.0))
    throw std::domain_error("TemperedStableParams: lambda must be > 0");
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::domain_error("TemperedStableParams: alpha must lie in [0, 1)");
}

void SubordinatorSpec::validate() const {
  params.validate();
  if (!(drift >= 0.0))
    throw std::domain_error("SubordinatorSpec: drift must be >= 0");
  if (!(truncation_eps > 0.0))
    throw std::domain_error("SubordinatorSpec: truncation_eps must be > 0");
}

double SubordinatorPath::value_at(double t) const {
  double z = drift * t;
  for (std::size_t i = 0; i < jump_times.size() && jump_times[i] <= t; ++i)
    z += jump_sizes[i];
  return z;
}

double levy_density(double z, const TemperedStableParams& params) {
  params.validate();
  if (!(z > 0.0)) throw std::domain_error("levy_density: z must be > 0");
  return params.c * std::pow(z, -(1.0 + params.alpha)) *
         std::exp(-params.lambda * z);
}

double laplace_exponent(double u, const TemperedStableParams& params) {
  params.validate();
  if (!(u >= 0.0)) throw std::domain_error("laplace_exponent: u must be >= 0");
  if (u == 0.0) return 0.0;
  if (params.is_gamma()) return params.c * std::log1p(u / params.lambda);
  return params.c * std::tgamma(-params.alpha) *
         (std::pow(params.lambda, params.alpha) -
          std::pow(params.lambda + u, params.alpha));
}

double levy_tail_mass(double eps, const TemperedStableParams& params,
                      const QuadratureConfig& cfg) {
  params.validate();
  if (!(eps > 0.0)) throw std::domain_error("levy_tail_mass: eps must be > 0");
  const auto nu = [&params](double z) { return levy_density(z, params); };
  return integrate_log_axis(nu, eps, std::numeric_limits<double>::infinity(),
                            std::log(eps), cfg)
      .value;
}

double sample_gamma_increment(double dt, const TemperedStableParams& params,
                              RngStream& rng) {
  params.validate();
  if (!params.is_gamma())
    throw std::domain_error("sample_gamma_increment: requires alpha = 0");
  if (!(dt > 0.0))
    throw std::domain_error("sample_gamma_increment: dt must be > 0");
  return rng.gamma(params.c * dt, params.lambda);
}

double sample_ts_increment(double dt, const TemperedStableParams& params,
                           RngStream& rng, TsSampleStats* stats) {
  params.validate();
  if (!(params.alpha > 0.0))
    throw std::domain_error("sample_ts_increment: requires alpha in (0, 1)");
  if (!(dt > 0.0))
    throw std::domain_error("sample_ts_increment: dt must be > 0");

  const double alpha = params.alpha;
  // Proposal: one-sided stable with Laplace transform exp(-theta u^alpha),
  // theta = dt c Gamma(1-alpha)/alpha, i.e. the lambda = 0 limit of the
  // target. Thinning by exp(-lambda S) tempers it exactly.
  const double theta = dt * params.c * std::tgamma(1.0 - alpha) / alpha;
  const double scale = std::pow(theta, 1.0 / alpha);
  const double accept_prob =
      std::exp(-theta * std::pow(params.lambda, alpha));
  if (accept_prob < kMinTsAcceptance)
    throw SamplingError(
        "sample_ts_increment: acceptance probability " +
        std::to_string(accept_prob) +
        " is degenerately small for dt * c * lambda^alpha this large; split "
        "dt into smaller pieces and sum the increments");

  const std::uint64_t cap =
      100 + static_cast<std::uint64_t>(200.0 / accept_prob);
  for (std::uint64_t iter = 0; iter < cap; ++iter) {
    // Kanter's representation of the standard one-sided stable law.
    const double u = M_PI * rng.uniform_open();
    const double e = rng.exponential();
    const double base =
        std::sin(alpha * u) / std::pow(std::sin(u), 1.0 / alpha);
    const double s_std =
        base * std::pow(std::sin((1.0 - alpha) * u) / e, (1.0 - alpha) / alpha);
    const double s = scale * s_std;
    if (stats) ++stats->proposals;
    if (rng.uniform01() < std::exp(-params.lambda * s)) {
      if (stats) ++stats->accepts;
      return s;
    }
  }
  throw SamplingError(
      "sample_ts_increment: iteration cap exceeded; split dt into smaller "
      "pieces and sum the increments");
}

double sample_subordinator_increment(double dt,
                                     const TemperedStableParams& params,
                                     RngStream& rng) {
  return params.is_gamma() ? sample_gamma_increment(dt, params, rng)
                           : sample_ts_increment(dt, params, rng);
}

JumpSizeTable::JumpSizeTable(const TemperedStableParams& params, double eps,
                             const QuadratureConfig& cfg)
    : eps_(eps), lambda_(params.lambda) {
  params.validate();
  if (!(eps > 0.0)) throw std::domain_error("JumpSizeTable: eps must be > 0");

  const double total_guess = levy_tail_mass(eps, params, cfg);
  double z_hi = 2.0 * eps;
  while (params.lambda * z_hi < 800.0 &&
         levy_tail_mass(z_hi, params, cfg) > total_guess * 1e-16)
    z_hi *= 1.5;

  const int n = kJumpTablePoints;
  z_.resize(n);
  cdf_.resize(n);
  const double ratio = std::log(z_hi / eps) / (n - 1);
  for (int i = 0; i < n; ++i) z_[i] = eps * std::exp(ratio * i);
  z_.back() = z_hi;

  const auto nu = [&params](double z) { return levy_density(z, params); };
  cdf_[0] = 0.0;
  double cum = 0.0;
  for (int i = 1; i < n; ++i) {
    cum += detail::gk15(nu, z_[i - 1], z_[i]).value;
    cdf_[i] = cum;
  }
  residual_ = levy_tail_mass(z_hi, params, cfg);
  tail_mass_ = cum + residual_;
  for (double& f : cdf_) f /= tail_mass_;
}

double JumpSizeTable::quantile(double u) const {
  if (u <= 0.0) return eps_;
  if (u >= cdf_.back()) {
    // Conditional mass beyond the grid (< 1e-16 of the law): exponential
    // tail patch with the tempering rate.
    const double frac = residual_ / tail_mass_;
    const double rem = std::max(1.0 - u, 1e-300);
    return z_.back() + std::max(0.0, -std::log(rem / frac)) / lambda_;
  }
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const std::size_t j = static_cast<std::size_t>(it - cdf_.begin());
  const double c0 = cdf_[j - 1], c1 = cdf_[j];
  const double t = (u - c0) / (c1 - c0);
  return z_[j - 1] + t * (z_[j] - z_[j - 1]);
}

SubordinatorPath sample_jump_path(double horizon, const SubordinatorSpec& spec,
                                  RngStream& rng, const JumpSizeTable* table) {
  spec.validate();
  if (!(horizon > 0.0))
    throw std::domain_error("sample_jump_path: horizon must be > 0");

  std::optional<JumpSizeTable> own;
  if (table == nullptr) {
    own.emplace(spec.params, spec.truncation_eps);
    table = &*own;
  }

  SubordinatorPath path;
  path.horizon = horizon;
  path.drift = spec.drift;

  const std::uint64_t count = rng.poisson(horizon * table->tail_mass());
  path.jump_times.resize(count);
  for (double& t : path.jump_times) t = horizon * rng.uniform_open();
  std::sort(path.jump_times.begin(), path.jump_times.end());
  path.jump_sizes.resize(count);
  for (double& z : path.jump_sizes) z = table->sample(rng);
  return path;
}

}  // namespace subcomp
