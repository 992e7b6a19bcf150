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

#include <cstdint>

namespace adaprobe {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

struct HashPair {
  std::uint64_t h1 = 0;  // home slot
  std::uint64_t h2 = 0;  // step

  friend constexpr bool operator==(const HashPair&, const HashPair&) = default;
};

constexpr HashPair derive_hashes(std::uint64_t key, std::uint64_t seed) noexcept {
  return {mix64(key ^ seed), mix64(key ^ seed ^ kGolden)};
}

}  // namespace adaprobe
