// Copyright 2026 The maxpareto Authors
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

#ifndef MAXPARETO_RNG_HPP
#define MAXPARETO_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "maxpareto/numeric.hpp"

namespace maxpareto {

/// Deterministic RNG. std::mt19937_64 output is pinned by the standard; the
/// value mappings below avoid std::uniform_int_distribution, whose results
/// are implementation-defined, so streams are reproducible across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  /// Unbiased integer in [lo, hi], inclusive. Rejection sampling.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<int64_t>(v % span);
  }

  /// Uniform in [0, 1) with 53 bits.
  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  bool coin(double p) { return uniform01() < p; }

  /// Log-uniform weight on [1, cap], snapped to a 64ths grid so exact-mode
  /// arithmetic sees small denominators. cap must be >= 1.
  Rational log_uniform_weight(double cap) {
    if (cap <= 1.0) return Rational(1);
    double w = std::exp(uniform01() * std::log(cap));
    int64_t grid = static_cast<int64_t>(std::llround(w * 64.0));
    Rational q(grid, 64);
    if (q < 1) q = 1;
    if (q > Rational(from_double(cap))) q = from_double(cap);
    return q;
  }

  /// Derives an independent stream for a sub-task; splitmix64 over the pair.
  static uint64_t derive(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace maxpareto

#endif  // MAXPARETO_RNG_HPP
