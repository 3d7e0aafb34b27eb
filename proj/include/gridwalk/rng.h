// Copyright 2026 The Gridwalk Authors
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

#ifndef GRIDWALK_RNG_H_
#define GRIDWALK_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace gridwalk {

// Name recorded in run metadata. Changing the engine or the derivation scheme
// changes every seeded output, so bump this string along with it.
inline constexpr std::string_view kRngAlgorithm =
    "mt19937_64; stream seed = splitmix64(splitmix64(seed ^ fnv1a64(tag)) + index)";

std::uint64_t SplitMix64(std::uint64_t x);

// Counter-based derivation: each (seed, purpose tag, index) triple gets its own
// independent stream, so adding draws in one code path cannot shift another.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view tag,
                         std::uint64_t index = 0);

// Thin wrapper over std::mt19937_64 with platform-independent distributions.
// std::uniform_int_distribution is implementation-defined, which would break
// byte-identical output across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0)
      : engine_(DeriveSeed(seed, tag, index)) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t UniformIndex(std::uint64_t bound);

  // Uniform in [0, 1) with 53 bits of resolution.
  double UniformReal() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return UniformReal() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gridwalk

#endif  // GRIDWALK_RNG_H_
