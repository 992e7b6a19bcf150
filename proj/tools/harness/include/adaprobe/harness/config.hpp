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
#include <string>
#include <vector>

#include "adaprobe/probe_strategy.hpp"
#include "adaprobe/workload.hpp"

namespace adaprobe::harness {

// 0.10, 0.15, ..., 0.95
std::vector<double> default_load_factors();

struct StrategyParams {
  AdaptiveParams bathroom;
  ElasticParams elastic;
  FunnelParams funnel;
};

// Throws UsageError for an unknown name.
StrategyKind make_strategy(const std::string& name, const StrategyParams& params);

struct BenchConfig {
  std::vector<std::string> strategies = {"random", "bathroom", "elastic", "funnel"};
  std::size_t entries = 10000;
  std::vector<double> load_factors = default_load_factors();
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  SizingMode mode = SizingMode::kFixedN;
  std::size_t table_size = 0;  // fixed-m only
  double unsuccessful = 0.0;
  StrategyParams params;
  unsigned threads = 0;  // 0: one per hardware thread
  std::string out = "results.csv";
  std::string hist = "histogram.csv";
  std::string report;  // empty: report goes to stdout only
};

struct SimConfig {
  std::size_t size = 1009;
  std::vector<double> occupancies = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  AdaptiveParams params;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::string out = "sim.csv";
};

struct PlotConfig {
  std::string in = "results.csv";
  std::string out = "plot.svg";
  std::string metric = "mean_probes";
  std::string op_kind = "LookupHit";
};

struct VerifyConfig {
  std::string suite = "all";
  std::uint64_t seed = 1;
};

// Each parser takes the arguments after the subcommand name. Flags override
// values read from `--config <file>` (bench only; a flat JSON object keyed by
// flag name without the leading dashes). Throw UsageError or HelpRequested.
BenchConfig parse_bench_args(const std::vector<std::string>& args);
SimConfig parse_sim_args(const std::vector<std::string>& args);
PlotConfig parse_plot_args(const std::vector<std::string>& args);
VerifyConfig parse_verify_args(const std::vector<std::string>& args);

}  // namespace adaprobe::harness
