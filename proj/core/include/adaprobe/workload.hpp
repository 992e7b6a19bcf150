// Copyright 2026 The adaprobe Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "adaprobe/hashing.hpp"

namespace adaprobe {

struct PrngState {
  std::uint64_t state = 0;
};

// splitmix64: state += golden gamma, output = mix64(state).
constexpr std::uint64_t splitmix_next(PrngState& prng) noexcept {
  prng.state += kGolden;
  return mix64(prng.state);
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double splitmix_unit(PrngState& prng) noexcept {
  return static_cast<double>(splitmix_next(prng) >> 11) * 0x1.0p-53;
}

// Seed for sub-stream (a, b) of a master seed. Distinct (a, b) pairs with
// a, b < 2^32 never share an input to the mixer.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                    std::uint64_t b) noexcept {
  return master ^ mix64((a << 32) | (b & 0xFFFFFFFFULL));
}

// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;
std::uint64_t next_prime(std::uint64_t n);

std::vector<std::uint64_t> gen_unique_keys(std::size_t n, std::uint64_t seed);

enum class SizingMode {
  kFixedN,  // m = next_prime(ceil(n / alpha))
  kFixedM,  // m given, n = floor(alpha * m)
};

struct TrialSpec {
  std::size_t n_entries = 10000;
  double target_alpha = 0.5;
  SizingMode mode = SizingMode::kFixedN;
  std::size_t capacity = 0;  // FixedM only
  std::uint64_t seed = 0;
  double unsuccessful_fraction = 0.0;
};

struct TrialPlan {
  std::size_t capacity = 0;
  std::vector<std::uint64_t> keys;          // inserted; every one is a hit probe
  std::vector<std::uint64_t> absent_keys;   // miss probes, disjoint from keys

  double achieved_alpha() const noexcept {
    return static_cast<double>(keys.size()) / static_cast<double>(capacity);
  }
  friend bool operator==(const TrialPlan&, const TrialPlan&) = default;
};

// Throws Error(kInvalidSpec) when alpha is outside (0, 1], the unsuccessful
// fraction is outside [0, 1], or a FixedM capacity is not prime.
TrialPlan build_trial(const TrialSpec& spec);

}  // namespace adaprobe
