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

#include "stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subcomp {

MeanSe mean_se(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return {};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(n);
  if (n < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) {
    const double d = v - mean;
    ss += d * d;
  }
  const double var = ss / static_cast<double>(n - 1);
  return {mean, std::sqrt(var / static_cast<double>(n))};
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max(d, std::max(f - lo, hi - f));
  }
  return d;
}

double kolmogorov_cdf(double k) {
  if (k <= 0.0) return 0.0;
  double sum = 0.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * k * k);
    sum += (j % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  return std::max(0.0, 1.0 - 2.0 * sum);
}

double kolmogorov_critical_value(double significance) {
  if (!(significance > 0.0 && significance < 1.0))
    throw std::domain_error("kolmogorov_critical_value: significance in (0,1)");
  double lo = 1e-3, hi = 5.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (1.0 - kolmogorov_cdf(mid) > significance)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

bool ks_test_passes(std::vector<double> samples,
                    const std::function<double(double)>& cdf,
                    double significance) {
  const double n = static_cast<double>(samples.size());
  const double d = ks_statistic(std::move(samples), cdf);
  return d * std::sqrt(n) <= kolmogorov_critical_value(significance);
}

}  // namespace subcomp
