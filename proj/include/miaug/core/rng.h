// Copyright 2026 The miaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIAUG_CORE_RNG_H_
#define MIAUG_CORE_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace miaug {

// Seed of the stream named `label` (optionally indexed, e.g. by sample id)
// under `master_seed`. Pure function of its arguments.
std::uint64_t DeriveSeed(std::uint64_t master_seed, std::string_view label,
                         std::uint64_t index = 0);

// Deterministic random stream. Distributions are implemented here rather
// than taken from <random> so that draws are identical across standard
// library implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}
  RngStream(std::uint64_t master_seed, std::string_view label,
            std::uint64_t index = 0)
      : engine_(DeriveSeed(master_seed, label, index)) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in the closed range [lo, hi].
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  bool Bernoulli(double p) { return Uniform() < p; }

  // Standard normal via Box-Muller.
  double Normal();

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(
          UniformInt(0, static_cast<std::int64_t>(i) - 1));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace miaug

#endif  // MIAUG_CORE_RNG_H_
