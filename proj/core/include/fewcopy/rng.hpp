// Copyright 2026 The fewcopy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FEWCOPY_RNG_HPP
#define FEWCOPY_RNG_HPP

#include <cstdint>
#include <random>

namespace fewcopy {

/// Seeded generator with platform-stable output. The engine (mt19937_64) has
/// standard-specified output, and all floating-point conversions are done
/// explicitly here rather than through std distributions, whose streams are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform index in [0, 2^bits). Exact for power-of-two ranges.
  std::uint64_t uniform_pow2(int bits) {
    return next_u64() & ((std::uint64_t{1} << bits) - 1);
  }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer, used to derive independent per-trial seeds from a
/// base seed and a trial index.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace fewcopy

#endif  // FEWCOPY_RNG_HPP
