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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "adaprobe/table.hpp"
#include "adaprobe/workload.hpp"

namespace {

using namespace adaprobe;

constexpr std::size_t kEntries = 10000;

StrategyKind kind_at(std::int64_t index) {
  switch (index) {
    case 0: return RandomParams{};
    case 1: return AdaptiveParams{};
    case 2: return ElasticParams{};
    default: return FunnelParams{};
  }
}

TrialPlan plan_for(std::int64_t alpha_pct) {
  return build_trial(TrialSpec{kEntries, static_cast<double>(alpha_pct) / 100.0,
                               SizingMode::kFixedN, 0, 1, 1.0});
}

void BM_Insert(benchmark::State& state) {
  const StrategyKind kind = kind_at(state.range(0));
  const TrialPlan plan = plan_for(state.range(1));
  std::uint64_t probes = 0;
  for (auto _ : state) {
    Table table(TableConfig{plan.capacity, kind, 1});
    for (const std::uint64_t k : plan.keys) probes += table.insert(k, k).probes;
    benchmark::DoNotOptimize(table.size());
  }
  state.SetLabel(std::string(strategy_name(kind)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.keys.size()));
  state.counters["probes/op"] = benchmark::Counter(
      static_cast<double>(probes) / static_cast<double>(state.iterations() * plan.keys.size()));
}

void BM_Lookup(benchmark::State& state) {
  const StrategyKind kind = kind_at(state.range(0));
  const TrialPlan plan = plan_for(state.range(1));
  const bool hits = state.range(2) != 0;
  Table table(TableConfig{plan.capacity, kind, 1});
  for (const std::uint64_t k : plan.keys) table.insert(k, k);
  const auto& keys = hits ? plan.keys : plan.absent_keys;
  std::uint64_t probes = 0;
  for (auto _ : state) {
    for (const std::uint64_t k : keys) {
      const LookupOutcome got = table.lookup(k);
      probes += got.probes;
      benchmark::DoNotOptimize(got.value);
    }
  }
  state.SetLabel(std::string(strategy_name(kind)) + (hits ? " hit" : " miss"));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(keys.size()));
  state.counters["probes/op"] = benchmark::Counter(
      static_cast<double>(probes) / static_cast<double>(state.iterations() * keys.size()));
}

// Args: strategy index, load factor in percent[, hit].
BENCHMARK(BM_Insert)->ArgsProduct({{0, 1, 2, 3}, {30, 50, 70, 90}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Lookup)
    ->ArgsProduct({{0, 1, 2, 3}, {30, 50, 70, 90}, {1, 0}})
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
