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
#include <random>

namespace subcomp {

/// A deterministic random stream: mt19937_64 plus hand-rolled variate
/// transformations, so that a given (seed, call sequence) produces the same
/// draws on every platform and worker layout. Substreams are derived from a
/// master seed with a SplitMix64-style hash of (stream tag, index); path i of
/// a Monte Carlo run always uses substream index i regardless of how paths
/// are partitioned across threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}

  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                   std::uint64_t index);
  static RngStream substream(std::uint64_t master, std::uint64_t stream,
                             std::uint64_t index) {
    return RngStream(derive_seed(master, stream, index));
  }

  std::uint64_t raw() { return eng_(); }

  double uniform01();     // [0, 1)
  double uniform_open();  // (0, 1)
  double normal();        // N(0, 1)
  double exponential();   // Exp(1)

  /// Gamma(shape, rate) by Marsaglia-Tsang, boosted for shape < 1.
  double gamma(double shape, double rate);

  /// Exact Poisson draw: single-uniform inversion for mean < 10 (monotone in
  /// the mean for a fixed uniform), Hormann's PTRS transformed rejection above.
  std::uint64_t poisson(double mean);

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace subcomp
