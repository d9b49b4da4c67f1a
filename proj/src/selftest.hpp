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

namespace subcomp {

struct SelftestRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the analytic invariant suite with fixed seeds: the Bessel integral
/// identity, the closed-form reductions, kernel normalization and symmetry,
/// Chapman-Kolmogorov spot checks, sampler goodness-of-fit, subordinator law
/// checks, and table accuracy. perturb_bessel is a debug hook that offsets
/// the Bessel values inside the identity row to demonstrate the row's
/// sensitivity; leave it at 0 for a real run.
std::vector<SelftestRow> run_selftest(double perturb_bessel = 0.0);

std::string selftest_table(const std::vector<SelftestRow>& rows);

}  // namespace subcomp
