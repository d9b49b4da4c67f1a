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

#include "rng.hpp"

#include <cmath>
#include <stdexcept>

namespace subcomp {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t RngStream::derive_seed(std::uint64_t master, std::uint64_t stream,
                                     std::uint64_t index) {
  std::uint64_t s = splitmix(master ^ 0x243F6A8885A308D3ULL);
  s = splitmix(s ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
  s = splitmix(s ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return s;
}

double RngStream::uniform01() {
  return static_cast<double>(raw() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() {
  return (static_cast<double>(raw() >> 12) + 0.5) * 0x1.0p-52;
}

double RngStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform_open()));
  const double theta = 2.0 * M_PI * uniform01();
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

double RngStream::exponential() { return -std::log(uniform_open()); }

double RngStream::gamma(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw std::domain_error("RngStream::gamma: shape and rate must be > 0");
  if (shape < 1.0) {
    const double boost = std::pow(uniform_open(), 1.0 / shape);
    return gamma(shape + 1.0, rate) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double z = normal();
    const double t = 1.0 + c * z;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = uniform_open();
    if (u < 1.0 - 0.0331 * z * z * z * z) return d * v / rate;
    if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v)))
      return d * v / rate;
  }
}

std::uint64_t RngStream::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw std::domain_error("RngStream::poisson: mean must be finite and >= 0");
  if (mean == 0.0) return 0;

  if (mean < 10.0) {
    const double u = uniform01();
    double p = std::exp(-mean);
    double cum = p;
    std::uint64_t k = 0;
    while (u > cum) {
      ++k;
      p *= mean / static_cast<double>(k);
      cum += p;
      if (k > 2000) break;  // unreachable for mean < 10
    }
    return k;
  }

  // Hormann's PTRS transformed rejection.
  const double llam = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = uniform01() - 0.5;
    const double v = uniform01();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        kf * llam - mean - std::lgamma(kf + 1.0))
      return static_cast<std::uint64_t>(kf);
  }
}

}  // namespace subcomp
