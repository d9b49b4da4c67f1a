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

#include "mc_verify.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <thread>

#include "specfun.hpp"
#include "stats.hpp"

namespace subcomp {

namespace {

// Substream tags: path i of the empirical estimator always sees
// (master, kEmpiricalStream, i); the predicted side uses its own tag unless
// the scenario couples the streams.
constexpr std::uint64_t kEmpiricalStream = 1;
constexpr std::uint64_t kPredictedStream = 2;

/// Runs fn(i) for i in [0, n) across the given number of threads. Results
/// must be written to per-index slots; reductions happen afterwards in index
/// order, so the outcome does not depend on the partitioning.
template <typename Fn>
void parallel_for(std::uint64_t n, int workers, const Fn& fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t threads =
      std::min<std::uint64_t>(std::max(workers, 1), std::min<std::uint64_t>(hw, n ? n : 1));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::uint64_t chunk = (n + threads - 1) / threads;
  for (std::uint64_t t = 0; t < threads; ++t) {
    const std::uint64_t lo = t * chunk;
    const std::uint64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

/// Walks one time-changed path. segment(dt, x) is invoked for every maximal
/// interval on which the retained-jump state is constant (before the jump
/// ending it); record(t, size) for every nonzero jump of X_Z. The drift part
/// of Z evolves the state between Z-jumps through the kernel (contributing
/// records only for kernels with jumps).
template <typename SegmentFn, typename RecordFn>
void walk_time_changed_path(const Scenario& sc, const TransitionKernel& kernel,
                            const JumpSizeTable& table, RngStream& rng,
                            const SegmentFn& segment, const RecordFn& record) {
  const SubordinatorPath path =
      sample_jump_path(sc.horizon, sc.subordinator, rng, &table);
  const double gamma = sc.subordinator.drift;

  double x = sc.x0;
  double t_prev = 0.0;
  double operative = 0.0;  // Z_{t-}: drift accrued + jumps applied so far
  const std::function<void(double, double)> record_fn = record;

  for (std::size_t i = 0; i <= path.jump_times.size(); ++i) {
    const bool at_jump = i < path.jump_times.size();
    const double t_next = at_jump ? path.jump_times[i] : sc.horizon;
    const double dt = t_next - t_prev;
    if (dt > 0.0) {
      segment(dt, x);
      if (gamma > 0.0) {
        x = kernel.evolve_with_records(gamma * dt, x, t_prev, t_next, rng,
                                       record_fn);
        operative += gamma * dt;
      }
    }
    if (at_jump) {
      const double z = path.jump_sizes[i];
      const double x_next = kernel.sample(z, x, operative, rng);
      if (x_next != x) record(t_next, x_next - x);
      x = x_next;
      operative += z;
    }
    t_prev = t_next;
  }
}

struct PredictedParts {
  double deterministic_rate = 0.0;  // per unit time, includes drift term
  bool is_deterministic = false;
};

PredictedParts deterministic_rate(const Scenario& sc) {
  PredictedParts parts;
  if (sc.kernel == KernelChoice::kCompoundPoisson) {
    parts.is_deterministic = true;
    double rate = window_rate_cp(sc.window, sc.cp, sc.subordinator.params,
                                 sc.quad);
    if (sc.subordinator.drift > 0.0)
      rate += sc.subordinator.drift * sc.cp.rate *
              window_gaussian_mass(sc.window, sc.cp.jump_std);
    parts.deterministic_rate = rate;
    return parts;
  }
  if (sc.skew.beta == 0.0) {
    parts.is_deterministic = true;
    const DirectTailIntegral tail(sc.subordinator.params, sc.quad);
    parts.deterministic_rate = window_rate_skew(0.0, sc.window, 0.0, tail);
  }
  return parts;
}

}  // namespace

void Scenario::validate() const {
  subordinator.validate();
  if (kernel == KernelChoice::kSkewBrownian)
    skew.validate();
  else
    cp.validate();
  if (!(horizon > 0.0))
    throw std::domain_error("Scenario: horizon must be > 0");
  if (n_paths < 1) throw std::domain_error("Scenario: n_paths must be >= 1");
  if (!(corrupt_predicted > 0.0))
    throw std::domain_error("Scenario: corrupt_predicted must be > 0");
  quad.validate();
}

std::shared_ptr<const TransitionKernel> Scenario::make_kernel() const {
  if (kernel == KernelChoice::kSkewBrownian)
    return std::make_shared<SkewBrownianKernel>(skew);
  return std::make_shared<CompoundPoissonKernel>(cp);
}

bool Scenario::deterministic_compensator() const {
  return kernel == KernelChoice::kCompoundPoisson || skew.beta == 0.0;
}

std::vector<JumpRecord> simulate_xz_jumps(const Scenario& scenario,
                                          RngStream& rng,
                                          const JumpSizeTable* table) {
  scenario.validate();
  std::optional<JumpSizeTable> own;
  if (table == nullptr) {
    own.emplace(scenario.subordinator.params, scenario.subordinator.truncation_eps,
                scenario.quad);
    table = &*own;
  }
  const auto kernel = scenario.make_kernel();
  std::vector<JumpRecord> records;
  walk_time_changed_path(
      scenario, *kernel, *table, rng, [](double, double) {},
      [&records](double t, double size) { records.push_back({t, size}); });
  return records;
}

std::pair<double, double> empirical_count(const Scenario& scenario) {
  scenario.validate();
  const auto kernel = scenario.make_kernel();
  const JumpSizeTable table(scenario.subordinator.params,
                            scenario.subordinator.truncation_eps, scenario.quad);
  std::vector<double> counts(scenario.n_paths);
  parallel_for(scenario.n_paths, scenario.workers, [&](std::uint64_t i) {
    RngStream rng =
        RngStream::substream(scenario.master_seed, kEmpiricalStream, i);
    double count = 0.0;
    walk_time_changed_path(
        scenario, *kernel, table, rng, [](double, double) {},
        [&](double, double size) {
          if (scenario.window.contains(size)) count += 1.0;
        });
    counts[i] = count;
  });
  const MeanSe ms = mean_se(counts);
  return {ms.mean, ms.se};
}

std::pair<double, double> predicted_count(const Scenario& scenario) {
  scenario.validate();
  const PredictedParts det = deterministic_rate(scenario);
  if (det.is_deterministic)
    return {scenario.horizon * det.deterministic_rate, 0.0};
  if (scenario.subordinator.drift > 0.0)
    throw std::domain_error(
        "predicted_count: the state-dependent predicted integral is only "
        "defined for a pure-jump subordinator (drift = 0)");

  // State-dependent case (skew Brownian, beta != 0, pure-jump Z): average the
  // pathwise integral of int_B k(x, y) dy over the piecewise-constant state.
  const auto kernel = scenario.make_kernel();
  const JumpSizeTable table(scenario.subordinator.params,
                            scenario.subordinator.truncation_eps, scenario.quad);
  const double delta = scenario.window.min_distance_to_zero();
  const double lambda = scenario.subordinator.params.lambda;
  const double s_max = delta + 30.0 + 70.0 / std::sqrt(2.0 * lambda);
  const TabulatedTailIntegral tail(scenario.subordinator.params, 0.5 * delta,
                                   s_max, 2048, scenario.quad);
  const double beta = scenario.skew.beta;

  std::vector<double> integrals(scenario.n_paths);
  const std::uint64_t stream =
      scenario.coupled ? kEmpiricalStream : kPredictedStream;
  parallel_for(scenario.n_paths, scenario.workers, [&](std::uint64_t i) {
    RngStream rng = RngStream::substream(scenario.master_seed, stream, i);
    double acc = 0.0;
    walk_time_changed_path(
        scenario, *kernel, table, rng,
        [&](double dt, double x) {
          acc += dt * window_rate_skew(x, scenario.window, beta, tail);
        },
        [](double, double) {});
    integrals[i] = acc;
  });
  const MeanSe ms = mean_se(integrals);
  return {ms.mean, ms.se};
}

double bias_bound(const Scenario& scenario) {
  scenario.validate();
  if (scenario.window.empty()) return 0.0;
  const double delta = scenario.window.min_distance_to_zero();
  const double eps = scenario.subordinator.truncation_eps;
  const TemperedStableParams& params = scenario.subordinator.params;

  if (scenario.kernel == KernelChoice::kSkewBrownian) {
    // P(|X_{s+z} - X_s| >= delta) <= 2 exp(-delta^2/(2z)) for any beta: the
    // skew term only redistributes mass across the sign of y inside the
    // doubled Gaussian envelope.
    const auto f = [&](double z) {
      return 2.0 * std::exp(-0.5 * delta * delta / z) * levy_density(z, params);
    };
    return scenario.horizon *
           integrate_log_axis(f, 0.0, eps, std::log(eps), scenario.quad).value;
  }
  const auto f = [&](double z) {
    return scenario.cp.rate * z * levy_density(z, params);
  };
  return scenario.horizon *
         integrate_log_axis(f, 0.0, eps, std::log(eps), scenario.quad).value;
}

VerificationReport run_verification(const Scenario& scenario) {
  scenario.validate();
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  if (scenario.subordinator.params.near_stability_limit())
    report.warnings.push_back(
        "alpha >= 0.95: rejection acceptance rates and jump-size table "
        "conditioning degrade near the stability limit");

  const auto [emp, emp_se] = empirical_count(scenario);
  auto [pred, pred_se] = predicted_count(scenario);
  pred *= scenario.corrupt_predicted;

  report.empirical_mean_count = emp;
  report.empirical_se = emp_se;
  report.predicted = pred;
  report.predicted_se = pred_se;
  report.truncation_bias_bound = bias_bound(scenario);

  const double combined_se = std::hypot(emp_se, pred_se);
  const double diff = emp - pred;
  if (combined_se > 0.0)
    report.z_score = diff / combined_se;
  else
    report.z_score = diff == 0.0 ? 0.0
                                 : std::copysign(
                                       std::numeric_limits<double>::infinity(),
                                       diff);
  report.pass = std::fabs(report.z_score) <= 4.0 &&
                report.truncation_bias_bound <= 0.25 * combined_se;

  report.seed = scenario.master_seed;
  report.n_paths = scenario.n_paths;
  report.eps = scenario.subordinator.truncation_eps;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace subcomp
