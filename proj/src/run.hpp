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

#include "config.hpp"
#include "report.hpp"

namespace subcomp {

/// Rendered command output plus the gate that decides the process exit code
/// (verification pass, density tolerance, selftest summary).
struct CommandOutput {
  std::string text;
  bool gate = true;
};

/// Builds a verification Scenario from the flat config keys (see README for
/// the key reference). Throws ConfigError / std::domain_error on invalid input.
Scenario scenario_from_config(const Config& cfg);

VerificationReport verify_from_config(const Config& cfg);

CommandOutput run_verify_command(const Config& cfg, OutputFormat format);
CommandOutput run_density_command(const Config& cfg, OutputFormat format);
CommandOutput run_simulate_command(const Config& cfg, OutputFormat format);
CommandOutput run_selftest_command(double perturb_bessel = 0.0);

}  // namespace subcomp
