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

#include <functional>
#include <span>
#include <vector>

namespace subcomp {

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

/// Sample mean and standard error (sd / sqrt(n)); se is 0 for n < 2.
MeanSe mean_se(std::span<const double> values);

/// One-sample Kolmogorov-Smirnov statistic sup_y |F_n(y) - cdf(y)|.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

/// Limit law of sqrt(n) * D_n: P(K <= k) = 1 - 2 sum_j (-1)^{j-1} exp(-2 j^2 k^2).
double kolmogorov_cdf(double k);

/// k with P(K > k) = significance.
double kolmogorov_critical_value(double significance);

/// Asymptotic one-sample test at the given significance level.
bool ks_test_passes(std::vector<double> samples,
                    const std::function<double(double)>& cdf,
                    double significance);

}  // namespace subcomp
