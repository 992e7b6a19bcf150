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

#include "adaprobe/stall_sim.hpp"

#include <string>

#include "adaprobe/error.hpp"
#include "adaprobe/metrics.hpp"
#include "adaprobe/workload.hpp"

namespace adaprobe {

namespace {

void check_arguments(const Board& board, std::size_t start, std::size_t d0,
                     const AdaptiveParams& params) {
  const std::size_t n = board.size();
  if (n == 0 || start >= n) {
    throw Error(ErrorCode::kInvalidStart,
                "start " + std::to_string(start) + " outside board of size " + std::to_string(n));
  }
  const std::size_t max_step = n > 1 ? n - 1 : 1;
  if (d0 < 1 || d0 > max_step) {
    throw Error(ErrorCode::kInvalidParams, "d0 " + std::to_string(d0) + " outside [1, n-1]");
  }
  validate(params);
}

bool satisfies(const Cell& cell, const SearchPredicate& predicate) {
  if (std::holds_alternative<FindVacant>(predicate)) return !cell.has_value();
  return cell.has_value() && *cell == std::get<FindId>(predicate).id;
}

}  // namespace

SimResult simulate_search(const Board& board, std::size_t start, std::size_t d0,
                          const SearchPredicate& predicate, const AdaptiveParams& params) {
  check_arguments(board, start, d0, params);
  const std::size_t n = board.size();

  SimResult result;
  result.trace.reserve(4);
  ProbeState state;
  state.current_slot = start;
  state.step = d0;

  for (std::size_t budget = 0; budget < n; ++budget) {
    const std::size_t at = state.current_slot;
    result.trace.push_back(at);
    result.steps.push_back(state.step);
    const Cell& cell = board.cells[at];
    if (satisfies(cell, predicate)) {
      result.found_index = at;
      result.probes = result.trace.size();
      return result;
    }
    const Observation obs = cell ? Observation::kOccupiedOther : Observation::kEmpty;
    state = adaptive_update(state, obs, params, n);
    state.current_slot = (at + state.step) % n;
  }

  result.fallback_used = true;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t at = (start + i) % n;
    result.trace.push_back(at);
    if (satisfies(board.cells[at], predicate)) {
      result.found_index = at;
      break;
    }
  }
  result.probes = result.trace.size();
  return result;
}

Board random_board(std::size_t n, double occupancy, std::uint64_t seed) {
  PrngState prng{seed};
  Board board;
  board.cells.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (splitmix_unit(prng) < occupancy) {
      board.cells.emplace_back(i + 1);
    } else {
      board.cells.emplace_back(std::nullopt);
    }
  }
  return board;
}

std::vector<SweepRow> occupancy_sweep(const SweepSpec& spec) {
  if (spec.n == 0) throw Error(ErrorCode::kInvalidParams, "board size must be positive");
  validate(spec.params);
  std::vector<SweepRow> rows;
  rows.reserve(spec.occupancies.size());
  for (std::size_t fi = 0; fi < spec.occupancies.size(); ++fi) {
    const double occupancy = spec.occupancies[fi];
    if (!(occupancy >= 0.0 && occupancy <= 1.0)) {
      throw Error(ErrorCode::kInvalidParams, "occupancy must lie in [0, 1]");
    }
    ProbeStats stats;
    std::size_t found = 0;
    for (std::size_t t = 0; t < spec.trials; ++t) {
      const std::uint64_t seed = derive_seed(spec.seed, fi, t);
      const Board board = random_board(spec.n, occupancy, seed);
      PrngState prng{mix64(seed)};
      const std::size_t start = static_cast<std::size_t>(splitmix_next(prng) % spec.n);
      const std::size_t d0 = base_step(splitmix_next(prng), spec.n);
      const SimResult r = simulate_search(board, start, d0, FindVacant{}, spec.params);
      stats.record(r.probes);
      if (r.found_index) ++found;
    }
    const SummaryStats s = stats.summarize();
    rows.push_back({spec.n, occupancy, spec.trials, s.mean, s.stddev, s.max,
                    spec.trials == 0 ? 0.0
                                     : static_cast<double>(found) / static_cast<double>(spec.trials)});
  }
  return rows;
}

}  // namespace adaprobe
