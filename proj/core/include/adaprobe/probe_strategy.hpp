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
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "adaprobe/hashing.hpp"

namespace adaprobe {

enum class Growth { kAdditive, kMultiplicative };

// Fixed-step double hashing: home = h1 mod m, step = 1 + h2 mod (m-1).
struct RandomParams {
  friend bool operator==(const RandomParams&, const RandomParams&) = default;
};

// The adaptive ("bathroom") rule. After `theta` consecutive occupied
// observations the step grows by `delta` (or doubles), and the run counter
// resets. Both values are fixed for the lifetime of a table.
struct AdaptiveParams {
  std::uint64_t theta = 2;
  std::uint64_t delta = 1;
  Growth growth = Growth::kAdditive;

  friend bool operator==(const AdaptiveParams&, const AdaptiveParams&) = default;
};

// Simplified three-region stand-in for elastic hashing: probe indices up to
// t1 step linearly, up to t2 use the key's double-hash step, beyond t2 the
// step is index^2 (quadratic).
struct ElasticParams {
  std::uint64_t t1 = 4;
  std::uint64_t t2 = 16;

  friend bool operator==(const ElasticParams&, const ElasticParams&) = default;
};

// Simplified funnel stand-in: the slot array is cut into geometrically
// shrinking levels. A key double-hashes inside a level for `budget_beta`
// probes, then drops to the next level; the last level is scanned linearly.
// No relocation is performed.
struct FunnelParams {
  std::uint32_t levels = 3;
  double shrink = 0.5;
  std::uint64_t budget_beta = 4;

  friend bool operator==(const FunnelParams&, const FunnelParams&) = default;
};

using StrategyKind =
    std::variant<RandomParams, AdaptiveParams, ElasticParams, FunnelParams>;

std::string_view strategy_name(const StrategyKind& kind) noexcept;

// Throws Error(kInvalidParams) when the parameters break their invariants.
void validate(const StrategyKind& kind);

enum class Observation { kOccupiedOther, kTombstone, kMatch, kEmpty };

constexpr bool is_occupied_class(Observation obs) noexcept {
  return obs == Observation::kOccupiedOther || obs == Observation::kTombstone;
}

enum class Region { kA, kB, kC };

Region elastic_region(std::uint64_t probe_index, const ElasticParams& params);

struct Level {
  std::size_t offset = 0;
  std::size_t length = 0;

  friend bool operator==(const Level&, const Level&) = default;
};

// Level layout: level0 = floor(m * shrink), each following level
// floor(previous * shrink) with a floor of 1, the last level takes the
// remainder. Throws Error(kInvalidParams) if a level would be empty.
std::vector<Level> funnel_levels(std::size_t m, const FunnelParams& params);

// Maps any positive step onto [1, modulus-1] via ((x-1) mod (modulus-1)) + 1.
// A modulus below 3 leaves exactly one legal step: 1.
std::size_t normalize_step(std::uint64_t step, std::size_t modulus) noexcept;

// The initial double-hash step 1 + h2 mod (modulus-1).
std::size_t base_step(std::uint64_t h2, std::size_t modulus) noexcept;

// Cursor for one probe sequence.
struct ProbeState {
  std::size_t current_slot = 0;
  std::size_t step = 1;          // d
  std::uint64_t consecutive = 0; // c, occupied observations in the current run
  std::size_t probes_made = 0;   // observations fed back so far
  std::size_t level = 0;         // funnel only
  std::size_t level_probes = 0;  // funnel only
  std::size_t home = 0;
  std::size_t base = 1;          // d0
  std::uint64_t h1 = 0;
  std::uint64_t h2 = 0;
  bool exhausted = false;

  friend bool operator==(const ProbeState&, const ProbeState&) = default;
};

// The counter/step rule in isolation. Occupied-class observations drive the
// increase branch; kEmpty drives the decrease branch (the live table never
// produces it, the stall simulator does). kMatch leaves the state unchanged.
ProbeState adaptive_update(ProbeState state, Observation obs,
                           const AdaptiveParams& params, std::size_t modulus);

// nullopt means the strategy budget of m observations is spent.
using StepResult = std::optional<std::size_t>;

// A strategy bound to a table size. Immutable once built; start/next are pure
// functions of their arguments and safe to share across threads.
class ProbeStrategy {
 public:
  ProbeStrategy(StrategyKind kind, std::size_t capacity);

  ProbeState start(const HashPair& hashes) const;

  // Feeds back the observation for state.current_slot and advances. Throws
  // Error(kContractViolation) when called on an exhausted state or with
  // kMatch.
  StepResult next(ProbeState& state, Observation obs) const;

  const StrategyKind& kind() const noexcept { return kind_; }
  std::size_t capacity() const noexcept { return capacity_; }
  std::span<const Level> levels() const noexcept { return levels_; }

  // Fixed accounting constant per strategy kind: random 0, bathroom 32,
  // elastic 24, funnel 16 + 16 per level.
  std::size_t metadata_bytes() const noexcept;

 private:
  std::size_t advance_funnel(ProbeState& state) const;

  StrategyKind kind_;
  std::size_t capacity_;
  std::vector<Level> levels_;
};

}  // namespace adaprobe
