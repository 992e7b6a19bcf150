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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Expected values are computed here, not taken from
// the library under test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "adaprobe/hashing.hpp"
#include "adaprobe/harness/bench.hpp"
#include "adaprobe/harness/config.hpp"
#include "adaprobe/metrics.hpp"
#include "adaprobe/probe_strategy.hpp"
#include "adaprobe/stall_sim.hpp"
#include "adaprobe/table.hpp"
#include "adaprobe/workload.hpp"

namespace {

using namespace adaprobe;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<StrategyKind> all_kinds() {
  return {RandomParams{}, AdaptiveParams{}, ElasticParams{}, FunnelParams{}};
}

Verdict ac1_oracle() {
  constexpr std::size_t kOps = 100000;
  constexpr std::size_t kCapacity = 1009;
  constexpr std::uint64_t kUniverse = 1000;
  const auto t0 = Clock::now();
  std::size_t runs = 0, rebuilds = 0;
  for (const StrategyKind& kind : all_kinds()) {
    for (const std::uint64_t seed : {3ULL, 1234ULL, 0xDEADBEEFULL}) {
      ++runs;
      std::mt19937_64 rng(seed);
      std::unordered_map<std::uint64_t, std::uint64_t> ref;
      Table table(TableConfig{kCapacity, kind, seed * 31 + 7});
      const std::string where = std::string(strategy_name(kind)) + " seed " + std::to_string(seed);
      for (std::size_t op = 0; op < kOps; ++op) {
        const std::uint64_t key = rng() % kUniverse;
        const unsigned roll = static_cast<unsigned>(rng() % 100);
        std::size_t probes = 0;
        if (roll < 45) {
          const std::uint64_t value = rng();
          const InsertOutcome got = table.insert(key, value);
          probes = got.probes;
          if (got.status == InsertOutcome::Status::kTableFull) {
            // Legitimate only for a new key when no Empty slot remains.
            const bool any_empty = std::any_of(table.slots().begin(), table.slots().end(),
                                               [](const Slot& s) { return s.tag == SlotTag::kEmpty; });
            if (ref.contains(key) || any_empty) return {false, where + ": spurious TableFull at op " + std::to_string(op)};
            ++rebuilds;
            Table fresh(table.config());
            for (const auto& [k, v] : ref) fresh.insert(k, v);
            table = std::move(fresh);
            const InsertOutcome again = table.insert(key, value);
            if (again.status != InsertOutcome::Status::kInserted) return {false, where + ": insert after rebuild failed"};
          } else {
            const bool existed = ref.contains(key);
            const auto want = existed ? InsertOutcome::Status::kUpdated : InsertOutcome::Status::kInserted;
            if (got.status != want) return {false, where + ": insert status mismatch at op " + std::to_string(op)};
          }
          ref[key] = value;
        } else if (roll < 65) {
          const DeleteOutcome got = table.erase(key);
          probes = got.probes;
          if (got.deleted != (ref.erase(key) == 1)) return {false, where + ": delete mismatch at op " + std::to_string(op)};
        } else {
          const LookupOutcome got = table.lookup(key);
          probes = got.probes;
          const auto it = ref.find(key);
          const bool ok = it == ref.end() ? !got.found() : (got.found() && *got.value == it->second);
          if (!ok) return {false, where + ": lookup mismatch at op " + std::to_string(op)};
        }
        if (probes < 1 || probes > 2 * kCapacity) return {false, where + ": probe count out of range"};
        if (table.size() != ref.size()) return {false, where + ": size mismatch at op " + std::to_string(op)};
      }
      for (std::uint64_t key = 0; key < kUniverse; ++key) {
        const LookupOutcome got = table.lookup(key);
        const auto it = ref.find(key);
        if (it == ref.end() ? got.found() : (!got.found() || *got.value != it->second)) {
          return {false, where + ": final sweep mismatch on key " + std::to_string(key)};
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return {secs < 10.0, std::to_string(runs) + " runs x " + std::to_string(kOps) +
                           " ops, 0 mismatches, " + std::to_string(rebuilds) + " rebuilds, " +
                           fmt("%.2f s", secs)};
}

bool visits_all(const ProbeStrategy& strategy, const HashPair& hashes, std::size_t m) {
  ProbeState st = strategy.start(hashes);
  std::vector<bool> seen(m, false);
  seen[st.current_slot] = true;
  std::size_t distinct = 1;
  for (std::size_t i = 1; i < m; ++i) {
    const StepResult slot = strategy.next(st, Observation::kOccupiedOther);
    if (!slot || *slot >= m) return false;
    if (!seen[*slot]) {
      seen[*slot] = true;
      ++distinct;
    }
  }
  return distinct == m && !strategy.next(st, Observation::kOccupiedOther).has_value();
}

Verdict ac2_permutation() {
  std::size_t checked = 0;
  for (const std::size_t m : {std::size_t{7}, std::size_t{101}}) {
    const ProbeStrategy strategy(RandomParams{}, m);
    for (std::size_t home = 0; home < m; ++home) {
      for (std::size_t d0 = 1; d0 < m; ++d0) {
        // h1 mod m picks the home slot, 1 + h2 mod (m - 1) picks the step.
        const ProbeState st = strategy.start(HashPair{home, d0 - 1});
        if (st.current_slot != home || st.step != d0) return {false, "start mismatch at m=" + std::to_string(m)};
        if (!visits_all(strategy, HashPair{home, d0 - 1}, m)) {
          return {false, "repeat at m=" + std::to_string(m) + " home=" + std::to_string(home) + " d0=" + std::to_string(d0)};
        }
        ++checked;
      }
    }
  }
  const std::size_t m = 10007;
  const ProbeStrategy strategy(RandomParams{}, m);
  std::mt19937_64 rng(10007);
  for (int i = 0; i < 1000; ++i) {
    if (!visits_all(strategy, derive_hashes(rng(), 42), m)) return {false, "repeat at m=10007"};
    ++checked;
  }
  return {true, std::to_string(checked) + " sequences are permutations"};
}

Verdict ac3_closed_form() {
  const auto t0 = Clock::now();
  constexpr std::size_t m = 10007;
  constexpr int kTrials = 20;
  auto run = [&](double alpha, bool hits, double& achieved) {
    double sum = 0.0, alpha_sum = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(t);
      const TrialPlan plan = build_trial(TrialSpec{0, alpha, SizingMode::kFixedM, m, seed, hits ? 0.0 : 1.0});
      Table table(TableConfig{m, RandomParams{}, mix64(seed)});
      for (const std::uint64_t k : plan.keys) table.insert(k, k);
      const auto& probe_keys = hits ? plan.keys : plan.absent_keys;
      std::uint64_t probes = 0;
      for (const std::uint64_t k : probe_keys) probes += table.lookup(k).probes;
      sum += static_cast<double>(probes) / static_cast<double>(probe_keys.size());
      alpha_sum += table.load_factor();
    }
    achieved = alpha_sum / kTrials;
    return sum / kTrials;
  };
  double a_hit = 0.0, a_miss = 0.0;
  const double hit = run(0.5, true, a_hit);
  const double miss = run(0.9, false, a_miss);
  const double want_hit = 2.0 * std::log(2.0);
  const double want_miss = 10.0;
  const bool ok_hit = std::abs(hit - want_hit) <= 0.05 * want_hit;
  const bool ok_miss = std::abs(miss - want_miss) <= 0.10 * want_miss;
  const double secs = seconds_since(t0);
  return {ok_hit && ok_miss && secs < 30.0,
          "hit " + fmt("%.4f", hit) + " vs " + fmt("%.4f", want_hit) + " at alpha " + fmt("%.4f", a_hit) +
              "; miss " + fmt("%.4f", miss) + " vs 10 at alpha " + fmt("%.4f", a_miss) + "; " +
              fmt("%.2f s", secs)};
}

Verdict ac4_reduction() {
  constexpr std::size_t m = 10007;
  const std::size_t n = static_cast<std::size_t>(0.7 * m);
  AdaptiveParams never;
  never.theta = m + 1;
  Table random(TableConfig{m, RandomParams{}, 77});
  Table bathroom(TableConfig{m, never, 77});
  std::mt19937_64 rng(70);
  std::unordered_set<std::uint64_t> inserted;
  while (inserted.size() < n) {
    const std::uint64_t k = rng();
    if (!inserted.insert(k).second) continue;
    const InsertOutcome a = random.insert(k, k);
    const InsertOutcome b = bathroom.insert(k, k);
    if (a.status != b.status || a.probes != b.probes) return {false, "insert diverged"};
  }
  std::vector<std::uint64_t> present(inserted.begin(), inserted.end());
  std::sort(present.begin(), present.end());
  std::size_t compared = 0, slots = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t k = (i % 2 == 0) ? present[rng() % present.size()] : rng();
    const ProbeTrace a = random.probe_trace(k);
    const ProbeTrace b = bathroom.probe_trace(k);
    if (a.slots_visited != b.slots_visited || a.sweep_start != b.sweep_start) {
      return {false, "trace diverged for key " + std::to_string(k)};
    }
    ++compared;
    slots += a.slots_visited.size();
  }
  return {true, std::to_string(compared) + " traces identical (" + std::to_string(slots) + " slots) at alpha " +
                    fmt("%.4f", random.load_factor())};
}

Verdict ac5_simulator() {
  const auto t0 = Clock::now();
  std::size_t cases = 0;
  auto check = [&](const Board& b, std::size_t start, std::size_t d0, const SearchPredicate& pred,
                   const AdaptiveParams& p) {
    ++cases;
    return simulate_search(b, start, d0, pred, p) == oracle_search(b, start, d0, pred, p);
  };
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Board board;
      std::vector<std::uint64_t> ids;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) {
          board.cells.emplace_back(i + 1);
          ids.push_back(i + 1);
        } else {
          board.cells.emplace_back(std::nullopt);
        }
      }
      std::vector<SearchPredicate> preds = {FindVacant{}, FindId{n + 100}};
      for (const std::uint64_t id : ids) preds.emplace_back(FindId{id});
      for (const std::uint64_t theta : {1ULL, 2ULL}) {
        AdaptiveParams p;
        p.theta = theta;
        p.delta = 1;
        for (std::size_t d0 = 1; d0 <= 3 && d0 <= std::max<std::size_t>(1, n - 1); ++d0) {
          for (std::size_t start = 0; start < n; ++start) {
            for (const auto& pred : preds) {
              if (!check(board, start, d0, pred, p)) {
                return {false, "mismatch n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                                   " start=" + std::to_string(start) + " d0=" + std::to_string(d0)};
              }
            }
          }
        }
      }
    }
  }
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const Board board = random_board(101, unit(rng), rng());
    AdaptiveParams p;
    p.theta = 1 + rng() % 4;
    p.delta = 1 + rng() % 3;
    p.growth = (rng() & 1) ? Growth::kAdditive : Growth::kMultiplicative;
    const std::size_t start = rng() % 101;
    const std::size_t d0 = 1 + rng() % 100;
    const SearchPredicate pred = (i % 2) ? SearchPredicate{FindVacant{}} : SearchPredicate{FindId{1 + rng() % 101}};
    if (!check(board, start, d0, pred, p)) return {false, "random board mismatch at case " + std::to_string(i)};
  }
  const double secs = seconds_since(t0);
  return {secs < 60.0, std::to_string(cases) + " searches identical, " + fmt("%.2f s", secs)};
}

std::string strip_wall(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

std::string results_csv(const harness::BenchResults& r) {
  std::ostringstream out;
  harness::write_results_csv(out, r);
  return out.str();
}

Verdict ac6_protocol(harness::BenchResults& default_run) {
  const harness::BenchConfig defaults;
  const auto t0 = Clock::now();
  default_run = harness::run_bench(defaults);
  const double default_secs = seconds_since(t0);
  const std::string first = results_csv(default_run);
  const std::string second = results_csv(harness::run_bench(defaults));

  std::istringstream in(first);
  std::string line;
  std::getline(in, line);
  std::unordered_map<std::string, std::size_t> per_kind;
  while (std::getline(in, line)) {
    std::size_t comma = 0;
    for (int field = 0; field < 6; ++field) comma = line.find(',', comma) + 1;
    ++per_kind[line.substr(comma, line.find(',', comma) - comma)];
  }
  const std::size_t want = 4 * 18 * 100;
  bool counts_ok = !per_kind.empty();
  std::string counts;
  for (const auto& [kind, count] : per_kind) {
    counts_ok = counts_ok && count == want;
    counts += kind + "=" + std::to_string(count) + " ";
  }
  const bool deterministic = strip_wall(first) == strip_wall(second);

  harness::BenchConfig fast;
  fast.trials = 10;
  const auto t1 = Clock::now();
  harness::run_bench(fast);
  const double fast_secs = seconds_since(t1);

  return {counts_ok && deterministic && fast_secs < 120.0,
          counts + "(want " + std::to_string(want) + "), " + (deterministic ? "deterministic" : "NOT deterministic") +
              ", default " + fmt("%.1f s", default_secs) + ", fast " + fmt("%.1f s", fast_secs)};
}

Verdict ac7_report(const harness::BenchResults& default_run) {
  const harness::ComparisonReport report = harness::compare_bathroom_random(default_run, 0.3, 0.7);
  std::ostringstream text;
  harness::write_report(text, report, default_run.config);
  const bool generated = report.applicable && report.lines.size() == 9 && !text.str().empty();
  return {generated, "report generated over " + std::to_string(report.lines.size()) +
                         " load factors; bathroom lower at " + std::to_string(report.bathroom_lower) +
                         "; claim " + (report.claim_holds ? "holds" : "does not hold") + " (recorded, not gated)"};
}

Verdict ac8_memory() {
  const std::vector<std::size_t> sizes = {7, 101, 10007, 100003};
  const std::vector<std::pair<StrategyKind, std::size_t>> kinds = {
      {RandomParams{}, 0}, {AdaptiveParams{}, 32}, {ElasticParams{}, 24}, {FunnelParams{}, 16 + 16 * 3}};
  for (const auto& [kind, meta] : kinds) {
    std::vector<std::size_t> got;
    for (const std::size_t m : sizes) {
      const Table table(TableConfig{m, kind, 1});
      got.push_back(table.memory_footprint());
      if (got.back() != m * 17 + meta) {
        return {false, std::string(strategy_name(kind)) + " m=" + std::to_string(m) + " gave " + std::to_string(got.back())};
      }
    }
    for (std::size_t i = 1; i < sizes.size(); ++i) {
      if (got[i] - got[i - 1] != (sizes[i] - sizes[i - 1]) * 17) return {false, "non-linear growth"};
    }
  }
  return {true, "16 footprints exact, 17 bytes per slot"};
}

Verdict ac9_metrics() {
  std::mt19937_64 rng(99);
  std::geometric_distribution<std::uint64_t> geo(0.3);
  std::vector<std::uint64_t> samples(100000);
  for (auto& s : samples) s = 1 + geo(rng);
  ProbeStats all, left, right;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    all.record(samples[i]);
    (i < 37000 ? left : right).record(samples[i]);
  }
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (const auto s : samples) mean += static_cast<double>(s);
  mean /= n;
  double var = 0.0;
  for (const auto s : samples) var += (static_cast<double>(s) - mean) * (static_cast<double>(s) - mean);
  const double stddev = std::sqrt(var / n);
  std::vector<std::uint64_t> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  const auto rank = static_cast<std::size_t>(std::ceil(0.99 * n));
  const std::uint64_t p99 = sorted[rank - 1];

  const SummaryStats got = all.summarize();
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  const bool stats_ok = got.count == samples.size() && rel(got.mean, mean) <= 1e-9 &&
                        rel(got.stddev, stddev) <= 1e-9 && got.p99 == p99 && got.max == sorted.back();
  ProbeStats merged = left;
  merged.merge(right);
  const bool merge_ok = merged == all;
  return {stats_ok && merge_ok, "mean " + fmt("%.6f", got.mean) + " stddev " + fmt("%.6f", got.stddev) +
                                    " p99 " + std::to_string(got.p99) + (merge_ok ? ", merge exact" : ", merge differs")};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](const char* id, const std::function<Verdict()>& fn) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS " : "FAIL ") << id << ": " << v.detail << std::endl;
    if (!v.pass) ++failed;
  };
  harness::BenchResults default_run;
  report("AC1 oracle equivalence", ac1_oracle);
  report("AC2 permutation coverage", ac2_permutation);
  report("AC3 closed-form anchor", ac3_closed_form);
  report("AC4 reduction", ac4_reduction);
  report("AC5 simulator differential", ac5_simulator);
  report("AC6 protocol reproduction", [&] { return ac6_protocol(default_run); });
  report("AC7 comparison report", [&] { return ac7_report(default_run); });
  report("AC8 memory accounting", ac8_memory);
  report("AC9 metrics oracle", ac9_metrics);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
