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

#include "selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "compensator.hpp"
#include "specfun.hpp"
#include "stats.hpp"

namespace subcomp {

namespace {

constexpr std::uint64_t kSelftestSeed = 0x5eedcafe01234567ULL;

struct Check {
  bool pass = true;
  double worst = 0.0;
  std::string note;

  void update(bool ok, double measure) {
    pass = pass && ok;
    if (measure > worst) worst = measure;
  }
};

SelftestRow row(const std::string& name, const Check& c,
                const std::string& what) {
  std::ostringstream detail;
  detail << what << " = " << c.worst;
  if (!c.note.empty()) detail << " (" << c.note << ")";
  return {name, c.pass, detail.str()};
}

SelftestRow bessel_identity_row(double perturb) {
  Check c;
  for (double v : {0.5, 0.9, 1.3}) {
    for (double a : {0.5, 1.0, 2.0, 4.0}) {
      for (double b : {0.5, 1.0, 2.0, 4.0}) {
        const double lhs = ts_integral_quadrature(v, a, b);
        const double rhs =
            2.0 * std::pow(a / b, v) * (bessel_k(v, a * b) + perturb);
        const double rel = std::fabs(lhs - rhs) / (1.0 + std::fabs(rhs));
        c.update(rel <= 1e-8, rel);
      }
    }
  }
  return row("bessel_integral_identity", c, "max rel diff");
}

SelftestRow bessel_half_order_row() {
  Check c;
  const QuadratureConfig tight{1e-30, 1e-13, 400};
  for (int i = 0; i <= 24; ++i) {
    const double x = 0.01 * std::pow(20.0 / 0.01, i / 24.0);
    const double closed = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
    const double integral = bessel_k_integral(0.5, x, tight);
    const double rel = std::fabs(integral - closed) / closed;
    c.update(rel <= 1e-12, rel);
  }
  return row("bessel_half_order_closed_form", c, "max rel diff");
}

SelftestRow bessel_monotone_row() {
  Check c;
  for (double v : {0.3, 0.9, 1.7}) {
    double prev = bessel_k(v, 0.05);
    for (double x = 0.1; x <= 12.0; x += 0.35) {
      const double cur = bessel_k(v, x);
      c.update(cur < prev, cur < prev ? 0.0 : cur - prev);
      prev = cur;
    }
  }
  return row("bessel_monotone_decreasing", c, "max violation");
}

SelftestRow tail_mass_scaling_row() {
  Check c;
  for (double alpha : {0.0, 0.5, 0.9}) {
    for (double eps : {0.01, 0.5, 2.0}) {
      const double base = levy_tail_mass(eps, {1.0, 1.0, alpha});
      for (double cc : {2.0, 5.0}) {
        const double scaled = levy_tail_mass(eps, {cc, 1.0, alpha});
        const double rel = std::fabs(scaled - cc * base) / (cc * base);
        c.update(rel <= 1e-12, rel);
      }
    }
  }
  return row("tail_mass_linear_in_c", c, "max rel diff");
}

const std::vector<double>& grid_x() {
  static const std::vector<double> xs{-1.0, 0.0, 0.3, 2.0};
  return xs;
}
const std::vector<double>& grid_y() {
  static const std::vector<double> ys{-3.0, -1.0, -0.25, 0.25, 1.0, 3.0};
  return ys;
}
const std::vector<double>& grid_beta() {
  static const std::vector<double> bs{-1.0, -0.5, 0.0, 0.5, 1.0};
  return bs;
}

SelftestRow gamma_reduction_row() {
  Check c;
  for (double x : grid_x()) {
    for (double y : grid_y()) {
      for (double beta : grid_beta()) {
        const SkewParams skew{beta};
        const double general = skew_ts_closed_form(x, y, skew, {1.0, 1.0, 0.0});
        const double gamma_case = skew_gamma_closed_form(x, y, skew, 1.0, 1.0);
        const double rel =
            std::fabs(general - gamma_case) / (1.0 + std::fabs(gamma_case));
        c.update(rel <= 1e-12, rel);
      }
    }
  }
  return row("gamma_case_reduction", c, "max rel diff");
}

SelftestRow variance_gamma_row() {
  Check c;
  const SubordinatorSpec spec{{1.0, 1.0, 0.0}, 0.0, 1e-4};
  const auto brownian = [](double z, double y) {
    return normal_pdf(y / std::sqrt(z)) / std::sqrt(z);
  };
  for (double y : {-5.0, -1.0, -0.1, 0.1, 1.0, 5.0}) {
    const double lhs = levy_subordination_density(y, {}, brownian, spec);
    const double rhs = vg_levy_density(y, 1.0, 1.0);
    const double rel = std::fabs(lhs - rhs) / rhs;
    c.update(rel <= 1e-8, rel);
  }
  return row("variance_gamma_reduction", c, "max rel diff");
}

SelftestRow normalization_row() {
  Check c;
  for (double t : {0.3, 1.0, 2.5}) {
    for (double x : {0.0, 0.7, -1.2}) {
      for (double beta : grid_beta()) {
        const SkewParams skew{beta};
        const double span = std::fabs(x) + 10.0 * std::sqrt(t);
        const auto f = [&](double y) { return skew_density(t, x, y, skew); };
        const double mass =
            integrate(f, -span, 0.0).value + integrate(f, 0.0, span).value;
        const double err = std::fabs(mass - 1.0);
        c.update(err <= 1e-8, err);
      }
    }
  }
  return row("skew_kernel_normalization", c, "max |mass - 1|");
}

SelftestRow symmetry_row() {
  Check c;
  for (double t : {0.4, 1.7}) {
    for (double x : grid_x()) {
      for (double y : grid_y()) {
        for (double beta : grid_beta()) {
          const double lhs = skew_density(t, x, y, SkewParams{beta});
          const double rhs = skew_density(t, -x, -y, SkewParams{-beta});
          c.update(lhs == rhs, std::fabs(lhs - rhs));
        }
      }
    }
  }
  return row("skew_kernel_mirror_symmetry", c, "max |diff|");
}

SelftestRow chapman_kolmogorov_row() {
  Check c;
  const double cases[3][5] = {{0.5, 0.5, 0.3, -0.4, 0.7},
                              {0.8, 0.4, -1.0, 0.6, -0.5},
                              {1.0, 2.0, 0.0, 1.5, 1.0}};
  for (const auto& cs : cases) {
    const double s = cs[0], t = cs[1], x = cs[2], y = cs[3];
    const SkewParams skew{cs[4]};
    const double span =
        std::max(std::fabs(x), std::fabs(y)) + 10.0 * std::sqrt(s + t);
    const auto f = [&](double m) {
      return skew_density(s, x, m, skew) * skew_density(t, m, y, skew);
    };
    const QuadratureConfig cfg{1e-12, 1e-12, 400};
    const double conv =
        integrate(f, -span, 0.0, cfg).value + integrate(f, 0.0, span, cfg).value;
    const double direct = skew_density(s + t, x, y, skew);
    c.update(std::fabs(conv - direct) <= 1e-6, std::fabs(conv - direct));
  }
  return row("chapman_kolmogorov", c, "max |diff|");
}

SelftestRow sampler_ks_row() {
  Check c;
  const double pairs[4][2] = {{0.0, 0.0}, {0.7, 0.3}, {-1.0, 1.0}, {1.0, 0.0}};
  const int n = 100000;
  int stream = 10;
  for (const auto& pr : pairs) {
    const SkewParams skew{pr[0]};
    const double x = pr[1];
    RngStream rng = RngStream::substream(kSelftestSeed, stream++, 0);
    std::vector<double> samples(n);
    for (double& v : samples) v = skew_sample(1.0, x, skew, rng);
    const double d = ks_statistic(
        std::move(samples), [&](double y) { return skew_cdf(1.0, x, y, skew); });
    const double crit = kolmogorov_critical_value(0.01) / std::sqrt(n);
    c.update(d <= crit, d / crit);
  }
  return row("skew_sampler_ks", c, "max D/D_crit");
}

SelftestRow laplace_row() {
  Check c;
  const int n = 100000;
  const double dt = 0.5;
  int stream = 20;
  for (double alpha : {0.0, 0.5}) {
    const TemperedStableParams params{1.0, 1.0, alpha};
    RngStream rng = RngStream::substream(kSelftestSeed, stream++, 0);
    std::vector<double> draws(n);
    for (double& v : draws) v = sample_subordinator_increment(dt, params, rng);
    for (double u : {0.5, 1.0, 2.0}) {
      std::vector<double> transformed(n);
      for (int i = 0; i < n; ++i) transformed[i] = std::exp(-u * draws[i]);
      const MeanSe ms = mean_se(transformed);
      const double target = std::exp(-dt * laplace_exponent(u, params));
      const double z = std::fabs(ms.mean - target) / ms.se;
      c.update(z <= 4.0, z);
    }
  }
  return row("subordinator_laplace_transform", c, "max |z|");
}

SelftestRow jump_count_row() {
  Check c;
  const int n = 5000;
  int stream = 30;
  for (double alpha : {0.0, 0.5}) {
    const SubordinatorSpec spec{{1.0, 1.0, alpha}, 0.0, 0.1};
    const JumpSizeTable table(spec.params, spec.truncation_eps);
    std::vector<double> counts(n);
    RngStream rng = RngStream::substream(kSelftestSeed, stream++, 0);
    for (double& v : counts)
      v = static_cast<double>(sample_jump_path(1.0, spec, rng, &table)
                                  .jump_times.size());
    const MeanSe ms = mean_se(counts);
    const double z = std::fabs(ms.mean - table.tail_mass()) / ms.se;
    c.update(z <= 4.0, z);
  }
  return row("jump_count_vs_tail_mass", c, "max |z|");
}

SelftestRow determinism_row() {
  Check c;
  for (double alpha : {0.0, 0.25, 0.5, 0.9}) {
    const TemperedStableParams params{1.0, 1.0, alpha};
    double flat = 0.0;
    for (double x : grid_x())
      for (double y : grid_y())
        flat = std::max(flat,
                        std::fabs(skew_ts_closed_form(x, y, SkewParams{0.0},
                                                      params) -
                                  skew_ts_closed_form(0.0, y, SkewParams{0.0},
                                                      params)));
    c.update(flat <= 1e-12, flat);
    double spread = 0.0;
    for (double x : grid_x())
      for (double y : grid_y())
        spread = std::max(
            spread, std::fabs(skew_ts_closed_form(x, y, SkewParams{0.7},
                                                  params) -
                              skew_ts_closed_form(0.0, y, SkewParams{0.7},
                                                  params)));
    c.update(spread > 1e-3, spread > 1e-3 ? 0.0 : 1.0);
  }
  return row("deterministic_iff_beta_zero", c, "max beta=0 spread");
}

SelftestRow nonnegativity_row() {
  Check c;
  for (double alpha : {0.0, 0.25, 0.5, 0.9}) {
    for (double x : grid_x())
      for (double y : grid_y())
        for (double beta : grid_beta()) {
          const double v =
              skew_ts_closed_form(x, y, SkewParams{beta}, {1.0, 1.0, alpha});
          c.update(v >= 0.0, v >= 0.0 ? 0.0 : -v);
        }
  }
  return row("closed_form_nonnegative", c, "max negative excursion");
}

SelftestRow tail_table_row() {
  Check c;
  for (double alpha : {0.0, 0.25}) {
    for (double lambda : {0.5, 1.0}) {
      const TemperedStableParams params{1.0, lambda, alpha};
      const TabulatedTailIntegral table(params, 0.25, 40.0, 2048);
      for (double s : {0.26, 0.41, 1.013, 2.77, 6.5, 11.3}) {
        const double direct = profile_tail_integral(s, params);
        const double rel = std::fabs(table(s) - direct) / direct;
        c.update(rel <= 1e-8, rel);
      }
    }
  }
  return row("tail_integral_table_accuracy", c, "max rel diff");
}

SelftestRow jump_table_row() {
  Check c;
  for (double alpha : {0.0, 0.5}) {
    const TemperedStableParams params{1.0, 1.0, alpha};
    const double eps = 1e-3;
    const JumpSizeTable table(params, eps);
    const double total = table.tail_mass();
    for (double u : {0.1, 0.5, 0.9, 0.99}) {
      // Independent quantile: solve Lambda(z)/Lambda(eps) = 1 - u by bisection.
      double lo = eps, hi = 1000.0;
      for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (levy_tail_mass(mid, params) / total > 1.0 - u)
          lo = mid;
        else
          hi = mid;
      }
      const double z_ref = 0.5 * (lo + hi);
      const double rel = std::fabs(table.quantile(u) - z_ref) / z_ref;
      c.update(rel <= 1e-4, rel);
    }
  }
  return row("jump_size_table_quantiles", c, "max rel diff");
}

}  // namespace

std::vector<SelftestRow> run_selftest(double perturb_bessel) {
  std::vector<SelftestRow> rows;
  rows.push_back(bessel_identity_row(perturb_bessel));
  rows.push_back(bessel_half_order_row());
  rows.push_back(bessel_monotone_row());
  rows.push_back(tail_mass_scaling_row());
  rows.push_back(gamma_reduction_row());
  rows.push_back(variance_gamma_row());
  rows.push_back(normalization_row());
  rows.push_back(symmetry_row());
  rows.push_back(chapman_kolmogorov_row());
  rows.push_back(sampler_ks_row());
  rows.push_back(laplace_row());
  rows.push_back(jump_count_row());
  rows.push_back(determinism_row());
  rows.push_back(nonnegativity_row());
  rows.push_back(tail_table_row());
  rows.push_back(jump_table_row());
  return rows;
}

std::string selftest_table(const std::vector<SelftestRow>& rows) {
  std::ostringstream out;
  bool all = true;
  for (const SelftestRow& r : rows) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << "\n";
    all = all && r.pass;
  }
  out << (all ? "selftest: all checks passed\n"
              : "selftest: FAILURES detected\n");
  return out.str();
}

}  // namespace subcomp
