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

#include "run.hpp"

#include <cmath>

#include "selftest.hpp"

namespace subcomp {

namespace {

QuadratureConfig quadrature_from_config(const Config& cfg) {
  QuadratureConfig quad;
  quad.abs_tol = cfg.get_double_or("quadrature.abs_tol", 1e-10);
  quad.rel_tol = cfg.get_double_or("quadrature.rel_tol", 1e-10);
  quad.max_subdivisions = cfg.get_int_or("quadrature.max_subdivisions", 200);
  quad.validate();
  return quad;
}

SubordinatorSpec subordinator_from_config(const Config& cfg) {
  SubordinatorSpec spec;
  spec.params.c = cfg.get_double("subordinator.c");
  spec.params.lambda = cfg.get_double("subordinator.lambda");
  spec.params.alpha = cfg.get_double_or("subordinator.alpha", 0.0);
  spec.drift = cfg.get_double_or("subordinator.drift", 0.0);
  spec.truncation_eps = cfg.get_double_or("subordinator.truncation_eps", 1e-4);
  spec.validate();
  return spec;
}

KernelChoice kernel_from_config(const Config& cfg) {
  const std::string type = cfg.get_string("kernel.type");
  if (type == "skew_bm") return KernelChoice::kSkewBrownian;
  if (type == "compound_poisson") return KernelChoice::kCompoundPoisson;
  throw ConfigError("kernel.type must be skew_bm or compound_poisson, got '" +
                    type + "'");
}

}  // namespace

Scenario scenario_from_config(const Config& cfg) {
  Scenario sc;
  sc.kernel = kernel_from_config(cfg);
  if (sc.kernel == KernelChoice::kSkewBrownian) {
    sc.skew.beta = cfg.get_double_or("kernel.beta", 0.0);
  } else {
    sc.cp.rate = cfg.get_double("kernel.rate");
    sc.cp.jump_std = cfg.get_double("kernel.jump_std");
  }
  sc.subordinator = subordinator_from_config(cfg);
  sc.horizon = cfg.get_double_or("verify.horizon", 1.0);
  sc.x0 = cfg.get_double_or("verify.x0", 0.0);
  sc.window = JumpWindow(parse_interval_list(cfg.get_string("verify.window")));
  sc.n_paths = cfg.get_u64_or("verify.n_paths", 100000);
  sc.master_seed = cfg.get_u64_or("seed", 1);
  sc.workers = cfg.get_int_or("workers", 1);
  sc.coupled = cfg.get_bool_or("verify.coupled", false);
  sc.corrupt_predicted = cfg.get_double_or("debug.corrupt_predicted", 1.0);
  sc.quad = quadrature_from_config(cfg);
  sc.validate();
  return sc;
}

VerificationReport verify_from_config(const Config& cfg) {
  return run_verification(scenario_from_config(cfg));
}

CommandOutput run_verify_command(const Config& cfg, OutputFormat format) {
  const VerificationReport report = verify_from_config(cfg);
  CommandOutput out;
  out.text = format == OutputFormat::kJson ? verification_report_json(report)
                                           : verification_report_csv(report);
  out.gate = report.pass;
  return out;
}

CommandOutput run_density_command(const Config& cfg, OutputFormat format) {
  if (kernel_from_config(cfg) != KernelChoice::kSkewBrownian)
    throw ConfigError("density tables require kernel.type = skew_bm");
  SkewParams skew{cfg.get_double_or("kernel.beta", 0.0)};
  skew.validate();
  SubordinatorSpec spec = subordinator_from_config(cfg);
  const QuadratureConfig quad = quadrature_from_config(cfg);

  const double y_min = cfg.get_double("density.y_min");
  const double y_max = cfg.get_double("density.y_max");
  const int n_points = cfg.get_int_or("density.n_points", 0);
  if (n_points < 2) throw ConfigError("density.n_points must be >= 2");
  if (!(y_min < y_max)) throw ConfigError("density.y_min must be < density.y_max");
  const double exclude = cfg.get_double_or("density.exclude_radius", 1e-3);
  if (!(exclude > 0.0))
    throw ConfigError("density.exclude_radius must be > 0 (densities are "
                      "singular at y = 0)");
  const double tolerance = cfg.get_double_or("density.tolerance", 1e-6);
  std::vector<double> xs{0.0};
  if (cfg.has("density.x_values")) xs = cfg.get_double_list("density.x_values");

  const SkewBrownianKernel kernel(skew);
  std::vector<DensityRow> rows;
  bool within = true;
  for (double x : xs) {
    for (int i = 0; i < n_points; ++i) {
      const double y = y_min + (y_max - y_min) * i / (n_points - 1);
      if (std::fabs(y) < exclude) continue;
      DensityRow row;
      row.x = x;
      row.y = y;
      row.closed_form = skew_ts_closed_form(x, y, skew, spec.params, quad);
      row.quadrature = theorem_density_quadrature(x, y, kernel, spec, quad);
      row.abs_diff = std::fabs(row.closed_form - row.quadrature);
      if (row.abs_diff > tolerance * (1.0 + std::fabs(row.closed_form)))
        within = false;
      rows.push_back(row);
    }
  }
  CommandOutput out;
  out.text = format == OutputFormat::kJson ? density_table_json(rows)
                                           : density_table_csv(rows);
  out.gate = within;
  return out;
}

CommandOutput run_simulate_command(const Config& cfg, OutputFormat format) {
  Scenario sc;
  sc.kernel = kernel_from_config(cfg);
  if (sc.kernel == KernelChoice::kSkewBrownian) {
    sc.skew.beta = cfg.get_double_or("kernel.beta", 0.0);
  } else {
    sc.cp.rate = cfg.get_double("kernel.rate");
    sc.cp.jump_std = cfg.get_double("kernel.jump_std");
  }
  sc.subordinator = subordinator_from_config(cfg);
  sc.horizon = cfg.get_double_or("verify.horizon", 1.0);
  sc.x0 = cfg.get_double_or("verify.x0", 0.0);
  sc.master_seed = cfg.get_u64_or("seed", 1);
  sc.quad = quadrature_from_config(cfg);
  sc.n_paths = cfg.get_u64_or("simulate.n_paths", 100);
  const std::uint64_t max_records =
      cfg.get_u64_or("simulate.max_records", 1000000);
  sc.validate();

  const JumpSizeTable table(sc.subordinator.params,
                            sc.subordinator.truncation_eps, sc.quad);
  std::vector<SimulatedJumpRow> rows;
  for (std::uint64_t p = 0; p < sc.n_paths && rows.size() < max_records; ++p) {
    // Path p uses the same substream as the verify command's empirical side,
    // so the emitted jumps are the ones a verification run would count.
    RngStream rng = RngStream::substream(sc.master_seed, 1, p);
    for (const JumpRecord& rec : simulate_xz_jumps(sc, rng, &table)) {
      rows.push_back({p, rec.t, rec.size});
      if (rows.size() >= max_records) break;
    }
  }
  CommandOutput out;
  out.text = format == OutputFormat::kJson ? simulate_table_json(rows)
                                           : simulate_table_csv(rows);
  return out;
}

CommandOutput run_selftest_command(double perturb_bessel) {
  const std::vector<SelftestRow> rows = run_selftest(perturb_bessel);
  CommandOutput out;
  out.text = selftest_table(rows);
  out.gate = true;
  for (const SelftestRow& row : rows) out.gate = out.gate && row.pass;
  return out;
}

}  // namespace subcomp
