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

#include <string>
#include <vector>

#include "mc_verify.hpp"

namespace subcomp {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_output_format(const std::string& name);

/// One row of the density table: both evaluations at (x, y) and their gap.
struct DensityRow {
  double x = 0.0;
  double y = 0.0;
  double closed_form = 0.0;
  double quadrature = 0.0;
  double abs_diff = 0.0;
};

/// One simulated jump of the time-changed process.
struct SimulatedJumpRow {
  std::uint64_t path = 0;
  double t = 0.0;
  double size = 0.0;
};

std::string format_double(double v);  // 17 significant digits

std::string verification_report_json(const VerificationReport& report);
std::string verification_report_csv(const VerificationReport& report);

std::string density_table_csv(const std::vector<DensityRow>& rows);
std::string density_table_json(const std::vector<DensityRow>& rows);

std::string simulate_table_csv(const std::vector<SimulatedJumpRow>& rows);
std::string simulate_table_json(const std::vector<SimulatedJumpRow>& rows);

/// Structured error object emitted by the CLI on failures.
std::string error_object_json(const std::string& code,
                              const std::string& message);

}  // namespace subcomp
