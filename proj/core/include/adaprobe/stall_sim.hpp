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
#include <variant>
#include <vector>

#include "adaprobe/probe_strategy.hpp"

namespace adaprobe {

// A cell is vacant (nullopt) or taken by an occupant id.
using Cell = std::optional<std::uint64_t>;

struct Board {
  std::vector<Cell> cells;

  std::size_t size() const noexcept { return cells.size(); }
};

struct FindVacant {};
struct FindId {
  std::uint64_t id;
};
using SearchPredicate = std::variant<FindVacant, FindId>;

struct SimResult {
  std::optional<std::size_t> found_index;
  std::size_t probes = 0;
  std::vector<std::size_t> trace;
  // Step in effect when each adaptive-phase probe was made. The sweep records
  // none.
  std::vector<std::size_t> steps;
  bool fallback_used = false;

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

// Adaptive search over a fixed occupancy board with both branches of the
// rule live: taken cells feed the increase branch, vacant cells that do not
// satisfy the predicate (only possible under FindId) feed the decrease branch.
// The budget is n adaptive probes, then a sweep of n cells from start + 1.
//
// Throws Error(kInvalidStart) if start >= n or the board is empty, and
// Error(kInvalidParams) if d0 is outside [1, max(1, n-1)] or params are bad.
SimResult simulate_search(const Board& board, std::size_t start, std::size_t d0,
                          const SearchPredicate& predicate, const AdaptiveParams& params);

// Independent, deliberately naive transcription of the same rule, kept apart
// from simulate_search for differential testing.
SimResult oracle_search(const Board& board, std::size_t start, std::size_t d0,
                        const SearchPredicate& predicate, const AdaptiveParams& params);

struct SweepSpec {
  std::size_t n = 1009;
  std::vector<double> occupancies;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  AdaptiveParams params;
};

struct SweepRow {
  std::size_t n = 0;
  double occupancy = 0.0;
  std::size_t trials = 0;
  double mean_probes = 0.0;
  double stddev_probes = 0.0;
  std::uint64_t max_probes = 0;
  double found_rate = 0.0;
};

// Each cell is independently taken with probability `occupancy`. One FindVacant
// search per board from a random start with a random d0. Board (i, t) is
// seeded from derive_seed(seed, i, t), so rows do not depend on evaluation
// order.
Board random_board(std::size_t n, double occupancy, std::uint64_t seed);
std::vector<SweepRow> occupancy_sweep(const SweepSpec& spec);

}  // namespace adaprobe
