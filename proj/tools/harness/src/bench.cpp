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

#include "adaprobe/harness/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "adaprobe/harness/common.hpp"
#include "adaprobe/table.hpp"
#include "adaprobe/workload.hpp"

namespace adaprobe::harness {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t nanos_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

TrialRecord run_one(const BenchConfig& config, const TrialPlan& plan, std::size_t strategy_index,
                    std::uint64_t seed) {
  const std::string& name = config.strategies[strategy_index];
  Table table({plan.capacity, make_strategy(name, config.params), seed});
  TrialRecord rec;
  rec.strategy_index = strategy_index;
  rec.seed = seed;
  rec.table_size = plan.capacity;
  rec.achieved_alpha = plan.achieved_alpha();
  rec.mem_bytes = table.memory_footprint();

  auto start = Clock::now();
  for (std::size_t i = 0; i < plan.keys.size(); ++i) {
    const InsertOutcome out = table.insert(plan.keys[i], i);
    if (out.status != InsertOutcome::Status::kInserted) {
      throw std::logic_error(name + ": insert of a fresh key did not insert (seed " +
                             std::to_string(seed) + ")");
    }
    rec.recorder.record(OpKind::kInsert, out.probes);
  }
  rec.wall_nanos[static_cast<std::size_t>(OpKind::kInsert)] = nanos_since(start);

  start = Clock::now();
  for (std::size_t i = 0; i < plan.keys.size(); ++i) {
    const LookupOutcome out = table.lookup(plan.keys[i]);
    if (out.value != i) {
      throw std::logic_error(name + ": lookup lost key " + std::to_string(plan.keys[i]) +
                             " (seed " + std::to_string(seed) + ")");
    }
    rec.recorder.record(OpKind::kLookupHit, out.probes);
  }
  rec.wall_nanos[static_cast<std::size_t>(OpKind::kLookupHit)] = nanos_since(start);

  if (config.unsuccessful > 0.0) {
    start = Clock::now();
    for (const auto key : plan.absent_keys) {
      const LookupOutcome out = table.lookup(key);
      if (out.found()) throw std::logic_error(name + ": absent key reported present");
      rec.recorder.record(OpKind::kLookupMiss, out.probes);
    }
    rec.wall_nanos[static_cast<std::size_t>(OpKind::kLookupMiss)] = nanos_since(start);
  }
  return rec;
}

void write_row_prefix(std::ostream& out, const BenchResults& results, const TrialRecord& r) {
  const BenchConfig& c = results.config;
  out << c.strategies[r.strategy_index] << ',' << r.table_size << ','
      << format_double(c.load_factors[r.alpha_index]) << ',' << format_double(r.achieved_alpha)
      << ',' << r.trial << ',' << r.seed << ',';
}

}  // namespace

std::vector<OpKind> BenchResults::op_kinds() const {
  std::vector<OpKind> kinds = {OpKind::kInsert, OpKind::kLookupHit};
  if (config.unsuccessful > 0.0) kinds.push_back(OpKind::kLookupMiss);
  return kinds;
}

BenchResults run_bench(const BenchConfig& config) {
  const std::size_t n_strategies = config.strategies.size();
  const std::size_t n_alpha = config.load_factors.size();
  const std::size_t units = n_alpha * config.trials;

  BenchResults results{config, std::vector<TrialRecord>(n_strategies * units)};
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t unit = next.fetch_add(1);
      if (unit >= units) return;
      const std::size_t a = unit / config.trials;
      const std::size_t t = unit % config.trials;
      try {
        TrialSpec spec;
        spec.n_entries = config.entries;
        spec.target_alpha = config.load_factors[a];
        spec.mode = config.mode;
        spec.capacity = config.table_size;
        spec.seed = derive_seed(config.seed, a, t);
        spec.unsuccessful_fraction = config.unsuccessful;
        const TrialPlan plan = build_trial(spec);
        for (std::size_t s = 0; s < n_strategies; ++s) {
          TrialRecord rec = run_one(config, plan, s, spec.seed);
          rec.alpha_index = a;
          rec.trial = t;
          results.records[s * units + unit] = std::move(rec);
        }
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(units);
        return;
      }
    }
  };

  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(units, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

void write_results_csv(std::ostream& out, const BenchResults& results) {
  out << kResultsHeader << '\n';
  const auto kinds = results.op_kinds();
  for (const TrialRecord& r : results.records) {
    for (OpKind kind : kinds) {
      const SummaryStats s = r.recorder.summarize(kind);
      write_row_prefix(out, results, r);
      out << to_string(kind) << ',' << s.count << ',' << format_double(s.mean) << ','
          << format_double(s.stddev) << ',' << s.max << ',' << s.p99 << ',' << r.mem_bytes << ','
          << r.wall_nanos[static_cast<std::size_t>(kind)] << '\n';
    }
  }
}

void write_histogram_csv(std::ostream& out, const BenchResults& results) {
  out << kHistogramHeader << '\n';
  const BenchConfig& c = results.config;
  std::map<std::pair<std::size_t, std::size_t>, Recorder> pooled;
  for (const TrialRecord& r : results.records) {
    pooled[{r.strategy_index, r.alpha_index}].merge(r.recorder);
  }
  for (const auto& [key, recorder] : pooled) {
    for (OpKind kind : results.op_kinds()) {
      for (const auto& [probes, count] : recorder.histogram(kind)) {
        out << c.strategies[key.first] << ',' << format_double(c.load_factors[key.second]) << ','
            << to_string(kind) << ',' << probes << ',' << count << '\n';
      }
    }
  }
}

ComparisonReport compare_bathroom_random(const BenchResults& results, double lo, double hi) {
  ComparisonReport report;
  report.lo = lo;
  report.hi = hi;
  const BenchConfig& c = results.config;
  std::optional<std::size_t> random_idx;
  std::optional<std::size_t> bathroom_idx;
  for (std::size_t i = 0; i < c.strategies.size(); ++i) {
    if (c.strategies[i] == "random") random_idx = i;
    if (c.strategies[i] == "bathroom") bathroom_idx = i;
  }
  if (!random_idx || !bathroom_idx) return report;

  std::map<std::pair<std::size_t, std::size_t>, ProbeStats> pooled;
  for (const TrialRecord& r : results.records) {
    if (r.strategy_index != *random_idx && r.strategy_index != *bathroom_idx) continue;
    pooled[{r.strategy_index, r.alpha_index}].merge(r.recorder.stats(OpKind::kLookupHit));
  }
  for (std::size_t a = 0; a < c.load_factors.size(); ++a) {
    const double alpha = c.load_factors[a];
    if (alpha < lo - 1e-12 || alpha > hi + 1e-12) continue;
    ComparisonLine line;
    line.target_alpha = alpha;
    line.random_mean = pooled[{*random_idx, a}].summarize().mean;
    line.bathroom_mean = pooled[{*bathroom_idx, a}].summarize().mean;
    if (line.bathroom_mean < line.random_mean) ++report.bathroom_lower;
    report.lines.push_back(line);
  }
  report.applicable = !report.lines.empty();
  report.claim_holds = report.applicable && report.bathroom_lower == report.lines.size();
  return report;
}

void write_report(std::ostream& out, const ComparisonReport& report, const BenchConfig& config) {
  out << "# bathroom vs random: mean probes per successful lookup\n\n";
  out << "load factors in [" << format_double(report.lo) << ", " << format_double(report.hi)
      << "], theta=" << config.params.bathroom.theta << ", delta=" << config.params.bathroom.delta
      << ", growth="
      << (config.params.bathroom.growth == Growth::kAdditive ? "additive" : "multiplicative")
      << ", trials=" << config.trials << ", seed=" << config.seed << "\n\n";
  if (!report.applicable) {
    out << "not applicable: needs both random and bathroom and a load factor in range\n";
    return;
  }
  out << "| target_alpha | random | bathroom | bathroom - random |\n";
  out << "|---|---|---|---|\n";
  for (const ComparisonLine& l : report.lines) {
    char row[160];
    std::snprintf(row, sizeof(row), "| %s | %.5f | %.5f | %+.5f |\n",
                  format_double(l.target_alpha).c_str(), l.random_mean, l.bathroom_mean,
                  l.bathroom_mean - l.random_mean);
    out << row;
  }
  out << "\nbathroom lower at " << report.bathroom_lower << " of " << report.lines.size()
      << " load factors\n";
  out << "claim (bathroom lower at moderate load): " << (report.claim_holds ? "HOLDS" : "DOES NOT HOLD")
      << "\n";
}

}  // namespace adaprobe::harness
