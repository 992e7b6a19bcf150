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

#include <iosfwd>
#include <string>
#include <vector>

#include "adaprobe/harness/config.hpp"
#include "adaprobe/harness/verify.hpp"
#include "adaprobe/stall_sim.hpp"

namespace adaprobe::harness {

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& config, std::ostream& out,
               const MapFactory& factory = table_factory());
int cmd_sim(const SimConfig& config, std::ostream& out, std::ostream& err);
int cmd_plot(const PlotConfig& config, std::ostream& out, std::ostream& err);

inline constexpr const char* kSimHeader =
    "n,occupancy,trials,mean_probes,stddev_probes,max_probes,found_rate";

void write_sim_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// args excludes the program name: {"bench", "--trials", "10", ...}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adaprobe::harness
