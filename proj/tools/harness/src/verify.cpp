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

#include "adaprobe/harness/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "adaprobe/metrics.hpp"
#include "adaprobe/stall_sim.hpp"
#include "adaprobe/workload.hpp"

namespace adaprobe::harness {

namespace {

class TableMap final : public MapUnderTest {
 public:
  explicit TableMap(const TableConfig& config) : table_(config) {}
  InsertOutcome insert(std::uint64_t key, std::uint64_t value) override {
    return table_.insert(key, value);
  }
  LookupOutcome lookup(std::uint64_t key) const override { return table_.lookup(key); }
  DeleteOutcome erase(std::uint64_t key) override { return table_.erase(key); }
  const Table& table() const override { return table_; }

 private:
  Table table_;
};

std::vector<StrategyKind> default_kinds() {
  return {RandomParams{}, AdaptiveParams{}, ElasticParams{}, FunnelParams{}};
}

std::string rerun(const char* suite, std::uint64_t seed) {
  return std::string("; rerun: adaprobe verify --suite ") + suite + " --seed " +
         std::to_string(seed);
}

SuiteResult fail(const char* suite, std::uint64_t seed, const std::string& what) {
  return {suite, false, what + rerun(suite, seed)};
}

}  // namespace

MapFactory table_factory() {
  return [](const TableConfig& config) { return std::make_unique<TableMap>(config); };
}

SuiteResult verify_oracle(std::uint64_t seed, const MapFactory& factory, std::size_t ops_per_run) {
  constexpr std::size_t kCapacity = 1009;
  constexpr std::size_t kUniverse = 1000;
  constexpr int kRunsPerStrategy = 3;
  const auto kinds = default_kinds();
  std::size_t total_ops = 0;

  for (std::size_t ki = 0; ki < kinds.size(); ++ki) {
    const std::string name(strategy_name(kinds[ki]));
    for (int run = 0; run < kRunsPerStrategy; ++run) {
      const std::uint64_t run_seed = derive_seed(seed, ki, static_cast<std::uint64_t>(run));
      const auto universe = gen_unique_keys(kUniverse, run_seed);
      PrngState rng{mix64(run_seed)};
      std::unordered_map<std::uint64_t, std::uint64_t> ref;
      auto map = factory({kCapacity, kinds[ki], run_seed});
      std::size_t rebuilds = 0;

      auto where = [&](std::size_t op, const char* kind, std::uint64_t key) {
        std::ostringstream s;
        s << "oracle: strategy=" << name << " run_seed=" << run_seed << " op=" << op
          << " kind=" << kind << " key=" << key;
        return s.str();
      };
      auto rebuild = [&] {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> live(ref.begin(), ref.end());
        std::sort(live.begin(), live.end());
        map = factory({kCapacity, kinds[ki], mix64(run_seed + ++rebuilds)});
        for (const auto& [k, v] : live) map->insert(k, v);
      };

      for (std::size_t op = 0; op < ops_per_run; ++op) {
        const std::uint64_t key = universe[splitmix_next(rng) % kUniverse];
        const std::uint64_t choice = splitmix_next(rng) % 100;
        std::size_t probes = 0;
        if (choice < 45) {
          const std::uint64_t value = splitmix_next(rng);
          const InsertOutcome out = map->insert(key, value);
          probes = out.probes;
          const bool present = ref.contains(key);
          if (out.status == InsertOutcome::Status::kTableFull) {
            const Table& t = map->table();
            if (present || t.size() + t.tombstones() != t.capacity()) {
              return fail("oracle", seed, where(op, "insert", key) + " spurious TableFull");
            }
            rebuild();
            continue;
          }
          if ((out.status == InsertOutcome::Status::kUpdated) != present) {
            return fail("oracle", seed, where(op, "insert", key) + " wrong insert/update status");
          }
          ref[key] = value;
        } else if (choice < 65) {
          const DeleteOutcome out = map->erase(key);
          probes = out.probes;
          if (out.deleted != (ref.erase(key) == 1)) {
            return fail("oracle", seed, where(op, "delete", key) + " delete disagrees with reference");
          }
        } else {
          const LookupOutcome out = map->lookup(key);
          probes = out.probes;
          const auto it = ref.find(key);
          const bool expect = it != ref.end();
          if (out.found() != expect || (expect && *out.value != it->second)) {
            return fail("oracle", seed,
                        where(op, "lookup", key) + (expect ? " expected present" : " expected absent"));
          }
        }
        if (probes > 2 * kCapacity) {
          return fail("oracle", seed, where(op, "any", key) + " exceeded 2m probes");
        }
        if (op < 10000 || op % 1000 == 0) {
          const Table& t = map->table();
          std::size_t occupied = 0;
          std::size_t tombstones = 0;
          for (const Slot& s : t.slots()) {
            occupied += s.tag == SlotTag::kOccupied;
            tombstones += s.tag == SlotTag::kTombstone;
          }
          if (occupied != t.size() || tombstones != t.tombstones() || occupied != ref.size()) {
            return fail("oracle", seed, where(op, "recount", key) + " counters drifted");
          }
        }
      }
      for (const auto key : universe) {
        const LookupOutcome out = map->lookup(key);
        const auto it = ref.find(key);
        if (out.found() != (it != ref.end()) || (out.found() && *out.value != it->second)) {
          return fail("oracle", seed, where(ops_per_run, "final-lookup", key) + " mismatch");
        }
      }
      total_ops += ops_per_run;
    }
  }
  return {"oracle", true,
          std::to_string(total_ops) + " ops over 4 strategies x 3 seeds, zero mismatches"};
}

SuiteResult verify_permutation(std::uint64_t seed) {
  auto distinct_walk = [](const ProbeStrategy& s, HashPair hp) {
    const std::size_t m = s.capacity();
    std::vector<bool> seen(m, false);
    ProbeState st = s.start(hp);
    std::size_t count = 0;
    StepResult slot = st.current_slot;
    while (slot) {
      if (seen[*slot]) return false;
      seen[*slot] = true;
      ++count;
      slot = s.next(st, Observation::kOccupiedOther);
    }
    return count == m;
  };
  std::size_t checked = 0;
  for (std::size_t m : {7u, 101u}) {
    const ProbeStrategy random(RandomParams{}, m);
    for (std::size_t home = 0; home < m; ++home) {
      for (std::size_t d0 = 1; d0 < m; ++d0) {
        ++checked;
        if (!distinct_walk(random, {home, d0 - 1})) {
          return fail("permutation", seed,
                      "permutation: m=" + std::to_string(m) + " home=" + std::to_string(home) +
                          " d0=" + std::to_string(d0) + " revisits a slot");
        }
      }
    }
  }
  const ProbeStrategy big(RandomParams{}, 10007);
  const auto keys = gen_unique_keys(1000, seed);
  for (const auto key : keys) {
    ++checked;
    if (!distinct_walk(big, derive_hashes(key, seed))) {
      return fail("permutation", seed,
                  "permutation: m=10007 key=" + std::to_string(key) + " revisits a slot");
    }
  }
  return {"permutation", true, std::to_string(checked) + " probe sequences are permutations"};
}

SuiteResult verify_reduction(std::uint64_t seed) {
  TrialSpec spec;
  spec.n_entries = 1000;
  spec.target_alpha = 0.7;
  spec.seed = seed;
  spec.unsuccessful_fraction = 1.0;
  const TrialPlan plan = build_trial(spec);
  const std::size_t m = plan.capacity;
  Table random({m, RandomParams{}, seed});
  Table bathroom({m, AdaptiveParams{m + 1, 1, Growth::kAdditive}, seed});
  for (std::size_t i = 0; i < plan.keys.size(); ++i) {
    random.insert(plan.keys[i], i);
    bathroom.insert(plan.keys[i], i);
  }
  std::size_t compared = 0;
  for (const auto* keys : {&plan.keys, &plan.absent_keys}) {
    for (const auto key : *keys) {
      ++compared;
      if (random.probe_trace(key).slots_visited != bathroom.probe_trace(key).slots_visited) {
        return fail("reduction", seed, "reduction: m=" + std::to_string(m) + " key=" +
                                           std::to_string(key) + " traces differ");
      }
    }
  }
  return {"reduction", true,
          std::to_string(compared) + " traces identical at alpha " +
              std::to_string(plan.achieved_alpha())};
}

SuiteResult verify_sim(std::uint64_t seed) {
  std::size_t runs = 0;
  auto check = [&](const Board& b, std::size_t start, std::size_t d0, const SearchPredicate& pred,
                   const AdaptiveParams& p, std::string* why) {
    ++runs;
    const SimResult fast = simulate_search(b, start, d0, pred, p);
    const SimResult slow = oracle_search(b, start, d0, pred, p);
    const std::size_t n = b.size();
    if (!(fast == slow)) {
      *why = "simulate_search and oracle_search disagree";
      return false;
    }
    if (fast.probes > 2 * n || fast.probes != fast.trace.size()) {
      *why = "probe budget broken";
      return false;
    }
    if (std::holds_alternative<FindVacant>(pred)) {
      const bool any_vacant =
          std::any_of(b.cells.begin(), b.cells.end(), [](const Cell& c) { return !c; });
      if (fast.found_index.has_value() != any_vacant) {
        *why = "FindVacant completeness broken";
        return false;
      }
      if (p.growth == Growth::kAdditive) {
        for (std::size_t k = 1; k < fast.steps.size(); ++k) {
          if (fast.steps[k] < fast.steps[k - 1] && fast.steps[k - 1] + p.delta <= n - 1) {
            *why = "step decreased during FindVacant";
            return false;
          }
        }
      }
    }
    return true;
  };
  auto describe = [](std::size_t n, std::uint64_t mask, std::size_t start, std::size_t d0,
                     const AdaptiveParams& p, const std::string& why) {
    std::ostringstream s;
    s << "sim: n=" << n << " taken_mask=" << mask << " start=" << start << " d0=" << d0
      << " theta=" << p.theta << " delta=" << p.delta
      << " growth=" << (p.growth == Growth::kAdditive ? "additive" : "multiplicative") << ": "
      << why;
    return s.str();
  };

  std::string why;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      Board b;
      std::optional<std::uint64_t> last_id;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) {
          b.cells.emplace_back(i + 1);
          last_id = i + 1;
        } else {
          b.cells.emplace_back(std::nullopt);
        }
      }
      std::vector<SearchPredicate> preds = {FindVacant{}, FindId{0}};
      if (last_id) preds.push_back(FindId{*last_id});
      for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t d0 : {1u, 2u, 3u}) {
          if (d0 > std::max<std::size_t>(1, n - 1)) continue;
          for (std::uint64_t theta : {1u, 2u}) {
            for (Growth g : {Growth::kAdditive, Growth::kMultiplicative}) {
              const AdaptiveParams p{theta, 1, g};
              for (const auto& pred : preds) {
                if (!check(b, start, d0, pred, p, &why)) {
                  return fail("sim", seed, describe(n, mask, start, d0, p, why));
                }
              }
            }
          }
        }
      }
    }
  }

  PrngState rng{seed};
  constexpr std::size_t kN = 101;
  for (int i = 0; i < 10000; ++i) {
    const double occupancy = splitmix_unit(rng);
    const Board b = random_board(kN, occupancy, splitmix_next(rng));
    const std::size_t start = splitmix_next(rng) % kN;
    const std::size_t d0 = 1 + splitmix_next(rng) % (kN - 1);
    const AdaptiveParams p{1 + splitmix_next(rng) % 4, 1 + splitmix_next(rng) % 3,
                           splitmix_next(rng) % 2 ? Growth::kAdditive : Growth::kMultiplicative};
    SearchPredicate pred = FindVacant{};
    if (splitmix_next(rng) % 2) pred = FindId{splitmix_next(rng) % (kN + 20)};
    if (!check(b, start, d0, pred, p, &why)) {
      return fail("sim", seed, "sim: random board #" + std::to_string(i) + " n=101: " + why);
    }
  }
  return {"sim", true, std::to_string(runs) + " searches identical to the oracle"};
}

SuiteResult verify_metrics(std::uint64_t seed) {
  PrngState rng{seed};
  std::vector<std::uint64_t> xs;
  Recorder whole;
  Recorder first;
  Recorder second;
  for (int i = 0; i < 100000; ++i) {
    // Roughly geometric probe counts with a long tail.
    const std::uint64_t v = 1 + static_cast<std::uint64_t>(-std::log1p(-splitmix_unit(rng)) * 3.0);
    xs.push_back(v);
    whole.record(OpKind::kLookupHit, v);
    (i < 50000 ? first : second).record(OpKind::kLookupHit, v);
  }
  long double sum = 0;
  for (auto x : xs) sum += x;
  const long double mean = sum / xs.size();
  long double sq = 0;
  for (auto x : xs) sq += (x - mean) * (x - mean);
  const double stddev = static_cast<double>(std::sqrt(sq / xs.size()));
  std::sort(xs.begin(), xs.end());
  const std::uint64_t p99 = xs[(99 * xs.size() + 99) / 100 - 1];

  const SummaryStats s = whole.summarize(OpKind::kLookupHit);
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };
  if (rel(s.mean, static_cast<double>(mean)) > 1e-9) return fail("metrics", seed, "metrics: mean");
  if (rel(s.stddev, stddev) > 1e-9) return fail("metrics", seed, "metrics: stddev");
  if (s.p99 != p99) return fail("metrics", seed, "metrics: p99");
  if (s.max != xs.back()) return fail("metrics", seed, "metrics: max");
  if (!(merge(first, second) == whole) || !(merge(second, first) == whole)) {
    return fail("metrics", seed, "metrics: merge differs from concatenation");
  }
  return {"metrics", true, "100000 samples match the two-pass oracle; merge == concatenation"};
}

std::vector<SuiteResult> run_verify(const std::string& suite, std::uint64_t seed,
                                    const MapFactory& factory) {
  std::vector<SuiteResult> out;
  const bool all = suite == "all";
  if (all || suite == "oracle") out.push_back(verify_oracle(seed, factory));
  if (all || suite == "permutation") out.push_back(verify_permutation(seed));
  if (all || suite == "reduction") out.push_back(verify_reduction(seed));
  if (all || suite == "sim") out.push_back(verify_sim(seed));
  if (all || suite == "metrics") out.push_back(verify_metrics(seed));
  return out;
}

}  // namespace adaprobe::harness
