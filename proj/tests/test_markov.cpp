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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "markov.hpp"
#include "specfun.hpp"
#include "stats.hpp"

using namespace subcomp;

namespace {
constexpr std::uint64_t kSeed = 0xabcdef0987654321ULL;

double integrate_full_line(const std::function<double(double)>& f, double span,
                           const QuadratureConfig& cfg = {}) {
  // split at the density's kink at 0
  return integrate(f, -span, 0.0, cfg).value + integrate(f, 0.0, span, cfg).value;
}
}  // namespace

TEST_CASE("skew params invariants") {
  CHECK_THROWS_AS(SkewParams{1.5}.validate(), std::domain_error);
  CHECK_THROWS_AS(SkewParams{-1.01}.validate(), std::domain_error);
  CHECK_NOTHROW(SkewParams{1.0}.validate());
  CHECK_THROWS_AS(skew_density(0.0, 0.0, 1.0, SkewParams{0.0}),
                  std::domain_error);
  CHECK_THROWS_AS(skew_cdf(-1.0, 0.0, 1.0, SkewParams{0.0}), std::domain_error);
}

TEST_CASE("skew density point values") {
  // beta = 0 is the Gaussian kernel
  CHECK(skew_density(1.0, 0.0, 1.0, SkewParams{0.0}) ==
        doctest::Approx(normal_pdf(1.0)).epsilon(1e-14));
  // beta = 1 doubles the positive side from x = 0 and kills the negative side
  CHECK(skew_density(1.0, 0.0, 1.0, SkewParams{1.0}) ==
        doctest::Approx(2.0 * normal_pdf(1.0)).epsilon(1e-14));
  CHECK(skew_density(1.0, 0.0, -1.0, SkewParams{1.0}) == 0.0);
}

TEST_CASE("skew density integrates to one") {
  for (double t : {0.5, 1.0, 3.0})
    for (double x : {0.0, 0.7, -1.3})
      for (double beta : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const SkewParams skew{beta};
        const double mass = integrate_full_line(
            [&](double y) { return skew_density(t, x, y, skew); },
            std::fabs(x) + 10.0 * std::sqrt(t));
        CHECK(std::fabs(mass - 1.0) < 1e-8);
      }
}

TEST_CASE("skew density mirror symmetry is exact") {
  for (double t : {0.5, 2.0})
    for (double x : {-1.0, 0.0, 0.4})
      for (double y : {-2.0, -0.3, 0.7, 1.5})
        for (double beta : {-1.0, -0.4, 0.2, 1.0})
          CHECK(skew_density(t, x, y, SkewParams{beta}) ==
                skew_density(t, -x, -y, SkewParams{-beta}));
}

TEST_CASE("Chapman-Kolmogorov spot checks") {
  const double cases[3][5] = {{0.5, 0.5, 0.3, -0.4, 0.7},
                              {0.8, 0.4, -1.0, 0.6, -0.5},
                              {1.0, 2.0, 0.0, 1.5, 1.0}};
  for (const auto& cs : cases) {
    const double s = cs[0], t = cs[1], x = cs[2], y = cs[3];
    const SkewParams skew{cs[4]};
    const double span =
        std::max(std::fabs(x), std::fabs(y)) + 10.0 * std::sqrt(s + t);
    const double conv = integrate_full_line(
        [&](double m) {
          return skew_density(s, x, m, skew) * skew_density(t, m, y, skew);
        },
        span, {1e-12, 1e-12, 400});
    CHECK(std::fabs(conv - skew_density(s + t, x, y, skew)) < 1e-6);
  }
}

TEST_CASE("skew cdf: limits, closed point values, density consistency") {
  const SkewParams skew{0.6};
  CHECK(skew_cdf(1.0, 0.3, 40.0, skew) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(skew_cdf(1.0, 0.3, -40.0, skew) == doctest::Approx(0.0).epsilon(1e-12));
  // F(0) from x = 0 equals (1 - beta)/2
  for (double beta : {-1.0, -0.2, 0.0, 0.8, 1.0})
    CHECK(skew_cdf(1.0, 0.0, 0.0, SkewParams{beta}) ==
          doctest::Approx((1.0 - beta) / 2.0).epsilon(1e-14));
  // numerical derivative matches the density
  for (double y : {-1.7, -0.4, 0.3, 0.9, 2.2}) {
    const double h = 1e-5;
    const double fd =
        (skew_cdf(1.0, 0.3, y + h, skew) - skew_cdf(1.0, 0.3, y - h, skew)) /
        (2.0 * h);
    CHECK(std::fabs(fd - skew_density(1.0, 0.3, y, skew)) < 1e-6);
  }
  // nondecreasing in y
  double prev = 0.0;
  for (double y = -6.0; y <= 6.0; y += 0.25) {
    const double f = skew_cdf(1.0, -0.5, y, SkewParams{-0.8});
    CHECK(f >= prev);
    prev = f;
  }
}

TEST_CASE("skew sampler matches the kernel law (KS at 0.01)") {
  const int n = 100000;
  const double pairs[4][3] = {
      {0.0, 0.0, 1.0}, {0.7, 0.3, 1.0}, {-1.0, 1.0, 1.0}, {-0.6, 0.3, 1.0}};
  int stream = 0;
  for (const auto& pr : pairs) {
    const SkewParams skew{pr[0]};
    const double x = pr[1], t = pr[2];
    RngStream rng = RngStream::substream(kSeed, 40, stream++);
    std::vector<double> samples(n);
    for (double& v : samples) v = skew_sample(t, x, skew, rng);
    CHECK(ks_test_passes(
        std::move(samples),
        [&](double y) { return skew_cdf(t, x, y, skew); }, 0.01));
  }
}

TEST_CASE("beta=0 sampler is exactly Gaussian (KS)") {
  const int n = 100000;
  RngStream rng = RngStream::substream(kSeed, 41, 0);
  std::vector<double> samples(n);
  for (double& v : samples) v = skew_sample(2.0, 0.7, SkewParams{0.0}, rng);
  CHECK(ks_test_passes(
      std::move(samples),
      [](double y) { return normal_cdf((y - 0.7) / std::sqrt(2.0)); }, 0.01));
}

TEST_CASE("beta=1 from the origin: nonnegative, half-normal magnitude") {
  const int n = 100000;
  RngStream rng = RngStream::substream(kSeed, 42, 0);
  std::vector<double> magnitudes(n);
  for (double& v : magnitudes) {
    const double s = skew_sample(1.0, 0.0, SkewParams{1.0}, rng);
    CHECK(s >= 0.0);
    v = std::fabs(s);
  }
  CHECK(ks_test_passes(
      std::move(magnitudes),
      [](double m) { return m <= 0.0 ? 0.0 : 2.0 * normal_cdf(m) - 1.0; },
      0.01));
}

TEST_CASE("compound poisson params and samples") {
  CHECK_THROWS_AS((CompoundPoissonParams{0.0, 1.0}.validate()),
                  std::domain_error);
  CHECK_THROWS_AS((CompoundPoissonParams{1.0, 0.0}.validate()),
                  std::domain_error);

  const CompoundPoissonParams params{2.0, 1.0};
  const int n = 100000;
  RngStream rng = RngStream::substream(kSeed, 43, 0);
  std::vector<double> draws(n);
  int at_start = 0;
  for (double& v : draws) {
    v = cp_sample(1.0, 0.0, params, rng);
    if (v == 0.0) ++at_start;
  }
  const MeanSe ms = mean_se(draws);
  CHECK(std::fabs(ms.mean) < 4.0 * ms.se);
  std::vector<double> sq(n);
  for (int i = 0; i < n; ++i) sq[i] = draws[i] * draws[i];
  const MeanSe vs = mean_se(sq);
  CHECK(std::fabs(vs.mean - 2.0) < 4.0 * vs.se);  // Var = r t sigma^2

  // void probability at rate 1: rerun with r = 1
  RngStream rng2 = RngStream::substream(kSeed, 44, 0);
  int voids = 0;
  for (int i = 0; i < n; ++i)
    if (cp_sample(1.0, 0.5, {1.0, 1.0}, rng2) == 0.5) ++voids;
  const double pv = static_cast<double>(voids) / n;
  const double target = std::exp(-1.0);
  CHECK(std::fabs(pv - target) <
        4.0 * std::sqrt(target * (1.0 - target) / n));
}

TEST_CASE("compound poisson marginal density: series vs oracle") {
  // n-term mixture at a point, via direct finite sum
  const CompoundPoissonParams params{1.0, 1.0};
  const double t = 1.0, dy = 1.3;
  double want = 0.0;
  double pmf = std::exp(-1.0);
  for (int n = 1; n <= 60; ++n) {
    pmf *= 1.0 / n;
    const double sd = std::sqrt(static_cast<double>(n));
    want += pmf * normal_pdf(dy / sd) / sd;
  }
  CHECK(cp_marginal_density(t, dy, params) ==
        doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("kernel interface: homogeneity flags and s is ignored") {
  const SkewBrownianKernel skew(SkewParams{0.4});
  CHECK(skew.is_continuous_paths());
  CHECK_FALSE(skew.is_spatially_homogeneous());
  CHECK(skew.density(1.0, 0.1, 0.0, 0.7) == skew.density(1.0, 0.1, 99.0, 0.7));
  CHECK_FALSE(skew.levy_jump_density());

  const SkewBrownianKernel flat(SkewParams{0.0});
  CHECK(flat.is_spatially_homogeneous());

  const CompoundPoissonKernel cp(CompoundPoissonParams{1.5, 0.8});
  CHECK_FALSE(cp.is_continuous_paths());
  CHECK(cp.is_spatially_homogeneous());
  CHECK(cp.density(1.0, 0.0, 0.0, 0.9) == cp.density(1.0, 0.0, 5.0, 0.9));
  const auto jump_density = cp.levy_jump_density();
  REQUIRE(jump_density);
  CHECK(jump_density(0.9) ==
        doctest::Approx(1.5 * normal_pdf(0.9 / 0.8) / 0.8).epsilon(1e-14));
}
