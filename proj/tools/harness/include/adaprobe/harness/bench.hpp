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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "adaprobe/harness/config.hpp"
#include "adaprobe/metrics.hpp"

namespace adaprobe::harness {

inline constexpr std::string_view kResultsHeader =
    "strategy,table_size,target_alpha,achieved_alpha,trial,seed,op_kind,ops,mean_probes,"
    "stddev_probes,max_probes,p99_probes,mem_bytes,wall_nanos";
inline constexpr std::string_view kHistogramHeader = "strategy,target_alpha,op_kind,probes,count";

// One (strategy, load factor, trial) run on a fresh table.
struct TrialRecord {
  std::size_t strategy_index = 0;
  std::size_t alpha_index = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t table_size = 0;
  double achieved_alpha = 0.0;
  std::size_t mem_bytes = 0;
  Recorder recorder;
  std::array<std::uint64_t, kAllOpKinds.size()> wall_nanos{};
};

struct BenchResults {
  BenchConfig config;
  // Ordered by strategy, then load factor, then trial.
  std::vector<TrialRecord> records;

  // Insert and LookupHit always; LookupMiss when unsuccessful lookups ran.
  std::vector<OpKind> op_kinds() const;
};

// Trial t at load-factor index a uses seed derive_seed(config.seed, a, t) for
// its key plan and hash seed, shared by every strategy. Work is spread over
// config.threads workers; the results do not depend on the thread count.
// Throws std::logic_error if a table ever loses or corrupts a key.
BenchResults run_bench(const BenchConfig& config);

void write_results_csv(std::ostream& out, const BenchResults& results);
void write_histogram_csv(std::ostream& out, const BenchResults& results);

struct ComparisonLine {
  double target_alpha = 0.0;
  double random_mean = 0.0;
  double bathroom_mean = 0.0;
};

struct ComparisonReport {
  bool applicable = false;  // both strategies ran and some alpha fell in range
  double lo = 0.3;
  double hi = 0.7;
  std::vector<ComparisonLine> lines;
  std::size_t bathroom_lower = 0;
  bool claim_holds = false;  // bathroom strictly lower at every compared alpha
};

// Mean successful-lookup probes of bathroom vs random, pooled over trials,
// for every grid load factor in [lo, hi].
ComparisonReport compare_bathroom_random(const BenchResults& results, double lo = 0.3,
                                         double hi = 0.7);
void write_report(std::ostream& out, const ComparisonReport& report, const BenchConfig& config);

}  // namespace adaprobe::harness
