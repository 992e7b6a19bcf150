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

#include "adaprobe/workload.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "adaprobe/error.hpp"

namespace adaprobe {

namespace {

// Absorbs binary representation error in alpha (10000 / 0.1 is not exactly
// 100000 in doubles) before rounding.
constexpr double kRoundingSlack = 1e-9;

class UniqueKeyStream {
 public:
  explicit UniqueKeyStream(std::uint64_t seed) : prng_{seed} {}

  std::uint64_t next() {
    for (;;) {
      const std::uint64_t k = splitmix_next(prng_);
      if (seen_.insert(k).second) return k;
    }
  }

  void reserve(std::size_t n) { seen_.reserve(n); }

 private:
  PrngState prng_;
  std::unordered_set<std::uint64_t> seen_;
};

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidSpec, "next_prime requires n >= 2");
  while (!is_prime(n)) ++n;
  return n;
}

std::vector<std::uint64_t> gen_unique_keys(std::size_t n, std::uint64_t seed) {
  UniqueKeyStream stream(seed);
  stream.reserve(n);
  std::vector<std::uint64_t> keys;
  keys.reserve(n);
  for (std::size_t i = 0; i < n; ++i) keys.push_back(stream.next());
  return keys;
}

TrialPlan build_trial(const TrialSpec& spec) {
  if (!(spec.target_alpha > 0.0 && spec.target_alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidSpec, "target alpha must lie in (0, 1]");
  }
  if (!(spec.unsuccessful_fraction >= 0.0 && spec.unsuccessful_fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidSpec, "unsuccessful fraction must lie in [0, 1]");
  }

  TrialPlan plan;
  std::size_t n = 0;
  if (spec.mode == SizingMode::kFixedN) {
    if (spec.n_entries == 0) throw Error(ErrorCode::kInvalidSpec, "n_entries must be positive");
    n = spec.n_entries;
    const double raw = static_cast<double>(n) / spec.target_alpha;
    const auto lower = static_cast<std::uint64_t>(std::ceil(raw - kRoundingSlack));
    plan.capacity = static_cast<std::size_t>(next_prime(std::max<std::uint64_t>(lower, 2)));
  } else {
    if (spec.capacity < 2 || !is_prime(spec.capacity)) {
      throw Error(ErrorCode::kInvalidSpec,
                  "FixedM capacity " + std::to_string(spec.capacity) + " is not a prime >= 2");
    }
    plan.capacity = spec.capacity;
    n = static_cast<std::size_t>(
        std::floor(spec.target_alpha * static_cast<double>(spec.capacity) + kRoundingSlack));
  }

  const auto misses = static_cast<std::size_t>(
      std::floor(spec.unsuccessful_fraction * static_cast<double>(n) + kRoundingSlack));
  UniqueKeyStream stream(spec.seed);
  stream.reserve(n + misses);
  plan.keys.reserve(n);
  for (std::size_t i = 0; i < n; ++i) plan.keys.push_back(stream.next());
  plan.absent_keys.reserve(misses);
  for (std::size_t i = 0; i < misses; ++i) plan.absent_keys.push_back(stream.next());
  return plan;
}

}  // namespace adaprobe
