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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "compensator.hpp"

namespace subcomp {

enum class KernelChoice { kSkewBrownian, kCompoundPoisson };

/// One verification experiment: the kernel, the time change, the horizon,
/// the jump window B (bounded away from 0), and the Monte Carlo budget.
struct Scenario {
  KernelChoice kernel = KernelChoice::kSkewBrownian;
  SkewParams skew;
  CompoundPoissonParams cp;
  SubordinatorSpec subordinator;
  double horizon = 1.0;
  double x0 = 0.0;
  JumpWindow window;
  std::uint64_t n_paths = 100000;
  std::uint64_t master_seed = 1;
  int workers = 1;
  bool coupled = false;  // predicted side reuses the empirical substreams
  double corrupt_predicted = 1.0;  // debug multiplier applied by the runner
  QuadratureConfig quad;

  void validate() const;
  std::shared_ptr<const TransitionKernel> make_kernel() const;
  /// True when the predicted side is a plain integral (se = 0): the kernel is
  /// spatially homogeneous, so the compensator does not depend on the state.
  bool deterministic_compensator() const;
};

/// Both sides of the compensator identity with the decision statistics.
/// pass requires |z_score| <= 4 and truncation_bias_bound <= 25% of the
/// combined standard error.
struct VerificationReport {
  double empirical_mean_count = 0.0;
  double empirical_se = 0.0;
  double predicted = 0.0;
  double predicted_se = 0.0;
  double z_score = 0.0;
  double truncation_bias_bound = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::uint64_t n_paths = 0;
  double eps = 0.0;
  double runtime_seconds = 0.0;
  int schema_version = 1;
  std::vector<std::string> warnings;
};

struct JumpRecord {
  double t = 0.0;     // wall-clock time in (0, horizon]
  double size = 0.0;  // nonzero jump of the time-changed process
};

/// One path of X_Z jumps: walks the retained Z-jumps in time order keeping
/// the running state, draws the kernel transition over each jump size, and
/// (for Levy kernels with drifted subordinators) the process's own jumps over
/// the accumulated drift time between Z-jumps.
std::vector<JumpRecord> simulate_xz_jumps(const Scenario& scenario,
                                          RngStream& rng,
                                          const JumpSizeTable* table = nullptr);

/// Mean and standard error over n_paths of the count of jumps landing in B.
std::pair<double, double> empirical_count(const Scenario& scenario);

/// Expected integrated compensator over B and [0, horizon]. Deterministic
/// compensators integrate directly (se = 0); state-dependent ones average the
/// pathwise integral sum_segments dt * int_B k(x_segment, y) dy over fresh
/// simulated paths (independent substreams unless scenario.coupled).
std::pair<double, double> predicted_count(const Scenario& scenario);

/// Upper bound on the expected number of window jumps lost to dropped
/// Z-jumps below eps. Skew Brownian kernel: the Gaussian tail bound
///   horizon * int_0^eps 2 exp(-delta^2 / (2 z)) nu(z) dz,  delta = d(B, 0).
/// Compound-Poisson kernel: a dropped z loses at most one record, and only
/// when X jumps inside it (probability 1 - e^{-r z} <= r z), giving
///   horizon * r * int_0^eps z nu(z) dz.
double bias_bound(const Scenario& scenario);

/// Runs both sides on substreams of master_seed and assembles the report;
/// bit-identical for fixed (master_seed, n_paths) regardless of workers.
VerificationReport run_verification(const Scenario& scenario);

}  // namespace subcomp
