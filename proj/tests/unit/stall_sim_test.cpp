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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "adaprobe/error.hpp"

namespace adaprobe {
namespace {

Board board_from_mask(std::size_t n, std::uint32_t taken_mask) {
  Board b;
  for (std::size_t i = 0; i < n; ++i) {
    b.cells.push_back((taken_mask >> i) & 1u ? Cell{i + 1} : Cell{});
  }
  return b;
}

TEST(SimulateSearch, AllVacant) {
  const Board b = board_from_mask(8, 0);
  for (std::size_t start = 0; start < 8; ++start) {
    const SimResult r = simulate_search(b, start, 3, FindVacant{}, {});
    EXPECT_EQ(r.found_index, start);
    EXPECT_EQ(r.probes, 1u);
    EXPECT_FALSE(r.fallback_used);
  }
}

TEST(SimulateSearch, AllTaken) {
  const Board b = board_from_mask(8, 0xFF);
  const SimResult r = simulate_search(b, 2, 3, FindVacant{}, {});
  EXPECT_FALSE(r.found_index.has_value());
  EXPECT_EQ(r.probes, 16u);
  EXPECT_TRUE(r.fallback_used);
}

TEST(SimulateSearch, HandTrace) {
  Board b = board_from_mask(13, 0);
  b.cells[5] = 100;
  b.cells[8] = 101;
  const SimResult r = simulate_search(b, 5, 3, FindVacant{}, {2, 1, Growth::kAdditive});
  EXPECT_EQ(r.found_index, 12u);
  EXPECT_EQ(r.trace, (std::vector<std::size_t>{5, 8, 12}));
  EXPECT_EQ(r.steps, (std::vector<std::size_t>{3, 3, 4}));
}

TEST(SimulateSearch, BadArguments) {
  const Board b = board_from_mask(4, 0);
  try {
    simulate_search(b, 4, 1, FindVacant{}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidStart);
  }
  EXPECT_THROW(simulate_search(b, 0, 4, FindVacant{}, {}), Error);
  EXPECT_THROW(simulate_search(b, 0, 0, FindVacant{}, {}), Error);
  EXPECT_THROW(oracle_search(b, 4, 1, FindVacant{}, {}), Error);
  EXPECT_THROW(simulate_search(Board{}, 0, 1, FindVacant{}, {}), Error);
}

TEST(SimulateSearch, DecreaseBranchFiresOnlyUnderFindId) {
  // Two taken cells grow the step to 4; each vacancy that is not the target
  // shrinks it again, down to 1.
  Board b = board_from_mask(13, 0);
  b.cells[5] = 1;
  b.cells[8] = 2;
  b.cells[3] = 7;
  const SimResult r = simulate_search(b, 5, 3, FindId{7}, {2, 1, Growth::kAdditive});
  ASSERT_GE(r.steps.size(), 4u);
  EXPECT_EQ(r.steps[2], 4u);
  EXPECT_EQ(r.steps[3], 3u);
  EXPECT_EQ(r.trace, (std::vector<std::size_t>{5, 8, 12, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12,
                                               6, 7, 8, 9, 10, 11, 12, 0, 1, 2, 3}));
  EXPECT_EQ(r.steps, (std::vector<std::size_t>{3, 3, 4, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(r.found_index, 3u);
  EXPECT_TRUE(r.fallback_used);
}

TEST(SimulateSearch, FindVacantNeverShrinksTheStep) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 2 + rng() % 60;
    const Board b = random_board(n, 0.9, rng());
    const AdaptiveParams p{1 + rng() % 3, 1 + rng() % 3,
                           rng() % 2 ? Growth::kAdditive : Growth::kMultiplicative};
    const SimResult r = simulate_search(b, rng() % n, 1, FindVacant{}, p);
    if (p.growth == Growth::kAdditive) {
      // Only the wrap at n-1 can lower an additive step.
      for (std::size_t k = 1; k < r.steps.size(); ++k) {
        ASSERT_TRUE(r.steps[k] >= r.steps[k - 1] || r.steps[k - 1] + p.delta > n - 1);
      }
    }
    ASSERT_LE(r.probes, 2 * n);
  }
}

TEST(SimulateSearch, MatchesOracleOnSmallBoards) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const Board b = board_from_mask(n, mask);
      for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t d0 = 1; d0 <= std::max<std::size_t>(1, n - 1); ++d0) {
          for (std::uint64_t theta : {1u, 2u, 3u}) {
            for (Growth g : {Growth::kAdditive, Growth::kMultiplicative}) {
              const AdaptiveParams p{theta, 1, g};
              for (const SearchPredicate pred :
                   {SearchPredicate{FindVacant{}}, SearchPredicate{FindId{1}},
                    SearchPredicate{FindId{99}}}) {
                ASSERT_EQ(simulate_search(b, start, d0, pred, p),
                          oracle_search(b, start, d0, pred, p))
                    << "n=" << n << " mask=" << mask << " start=" << start;
              }
            }
          }
        }
      }
    }
  }
}

TEST(SimulateSearch, CompletenessOnSmallBoards) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const Board b = board_from_mask(n, mask);
      const bool has_vacancy = mask != (1u << n) - 1;
      for (std::size_t start = 0; start < n; ++start) {
        const SimResult r = simulate_search(b, start, 1, FindVacant{}, {});
        ASSERT_EQ(r.found_index.has_value(), has_vacancy);
        if (r.found_index) ASSERT_FALSE(b.cells[*r.found_index].has_value());
      }
    }
  }
}

TEST(OccupancySweep, Extremes) {
  SweepSpec spec;
  spec.n = 101;
  spec.occupancies = {0.0, 1.0};
  spec.trials = 50;
  spec.seed = 3;
  const auto rows = occupancy_sweep(spec);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].mean_probes, 1.0);
  EXPECT_EQ(rows[0].found_rate, 1.0);
  EXPECT_EQ(rows[1].mean_probes, 202.0);
  EXPECT_EQ(rows[1].max_probes, 202u);
  EXPECT_EQ(rows[1].found_rate, 0.0);
}

TEST(OccupancySweep, HalfOccupancyIsGeometric) {
  SweepSpec spec;
  spec.n = 1009;
  spec.occupancies = {0.5};
  spec.trials = 1000;
  spec.seed = 17;
  const auto rows = occupancy_sweep(spec);
  EXPECT_NEAR(rows[0].mean_probes, 2.0, 0.1);
  EXPECT_EQ(rows[0].found_rate, 1.0);
}

TEST(OccupancySweep, Deterministic) {
  SweepSpec spec;
  spec.n = 97;
  spec.occupancies = {0.3, 0.8};
  spec.trials = 100;
  spec.seed = 5;
  const auto a = occupancy_sweep(spec);
  const auto b = occupancy_sweep(spec);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].mean_probes, b[i].mean_probes);
    EXPECT_EQ(a[i].max_probes, b[i].max_probes);
  }
  spec.occupancies = {1.5};
  EXPECT_THROW(occupancy_sweep(spec), Error);
}

}  // namespace
}  // namespace adaprobe
