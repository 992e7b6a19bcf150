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

#include "adaprobe/harness/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "adaprobe/error.hpp"
#include "adaprobe/harness/common.hpp"

namespace adaprobe::harness {

namespace {

using RawOptions = std::map<std::string, std::string>;

struct FlagSpec {
  const char* name;
  const char* help;
};

constexpr FlagSpec kBenchFlags[] = {
    {"strategies", "comma-separated subset of random,bathroom,elastic,funnel"},
    {"entries", "keys inserted per trial (fixed-n)"},
    {"load-factors", "comma-separated target load factors in (0,1]"},
    {"trials", "trials per (strategy, load factor)"},
    {"seed", "master seed"},
    {"mode", "fixed-n | fixed-m"},
    {"table-size", "prime table size for fixed-m"},
    {"unsuccessful", "absent lookups as a fraction of entries, in [0,1]"},
    {"theta", "bathroom: consecutive-occupied threshold"},
    {"delta", "bathroom: step increment"},
    {"growth", "bathroom: additive | multiplicative"},
    {"elastic-t1", "elastic: end of the linear region"},
    {"elastic-t2", "elastic: end of the double-hash region"},
    {"funnel-levels", "funnel: number of levels"},
    {"funnel-shrink", "funnel: level size ratio in (0,1)"},
    {"funnel-beta", "funnel: probes per level before descending"},
    {"threads", "worker threads (0 = hardware concurrency)"},
    {"out", "results CSV path"},
    {"hist", "histogram CSV path"},
    {"report", "bathroom vs random comparison report path"},
};

constexpr FlagSpec kSimFlags[] = {
    {"size", "board size n"},
    {"occupancy", "comma-separated occupancy fractions in [0,1]"},
    {"theta", "consecutive-occupied threshold"},
    {"delta", "step increment"},
    {"growth", "additive | multiplicative"},
    {"trials", "boards per occupancy"},
    {"seed", "master seed"},
    {"out", "sim CSV path"},
};

constexpr FlagSpec kPlotFlags[] = {
    {"in", "results CSV to read"},
    {"out", "SVG path to write"},
    {"metric", "mean_probes | stddev_probes | max_probes | p99_probes | mem_bytes | wall_nanos"},
    {"op-kind", "Insert | LookupHit | LookupMiss"},
};

constexpr FlagSpec kVerifyFlags[] = {
    {"suite", "all | oracle | permutation | reduction | sim | metrics"},
    {"seed", "seed for randomized suites"},
};

// Parses argv-style args into raw strings for the flags that were given.
template <std::size_t N>
RawOptions parse_flags(const std::string& name, const FlagSpec (&flags)[N],
                       const std::vector<std::string>& args, std::string* config_path) {
  CLI::App app{"adaprobe " + name, "adaprobe " + name};
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  for (const FlagSpec& f : flags) {
    options[f.name] = app.add_option(std::string("--") + f.name, values[f.name], f.help);
  }
  CLI::Option* config = nullptr;
  std::string config_value;
  if (config_path != nullptr) {
    config = app.add_option("--config", config_value, "flat JSON object of flag values");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n" + app.help());
  }

  RawOptions raw;
  for (const auto& [flag, option] : options) {
    if (option->count() > 0) raw[flag] = values[flag];
  }
  if (config != nullptr && config->count() > 0) *config_path = config_value;
  return raw;
}

std::string json_scalar(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) return format_double(v.get<double>());
  throw UsageError("config key '" + key + "' must be a string, number or array");
}

template <std::size_t N>
RawOptions read_config_file(const std::string& path, const FlagSpec (&flags)[N]) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("malformed config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a flat JSON object");

  std::set<std::string> known;
  for (const FlagSpec& f : flags) known.insert(f.name);
  RawOptions raw;
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw UsageError("unknown config key '" + key + "'");
    if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ',';
        joined += json_scalar(item, key);
      }
      raw[key] = joined;
    } else {
      raw[key] = json_scalar(value, key);
    }
  }
  return raw;
}

std::size_t positive(const RawOptions& raw, const std::string& key, std::size_t fallback) {
  const auto it = raw.find(key);
  if (it == raw.end()) return fallback;
  const auto v = parse_unsigned(it->second, "--" + key);
  if (v == 0) throw UsageError("--" + key + " must be >= 1");
  return static_cast<std::size_t>(v);
}

Growth parse_growth(const RawOptions& raw, Growth fallback) {
  const auto it = raw.find("growth");
  if (it == raw.end()) return fallback;
  if (it->second == "additive") return Growth::kAdditive;
  if (it->second == "multiplicative") return Growth::kMultiplicative;
  throw UsageError("--growth must be additive or multiplicative");
}

std::vector<double> fractions(const std::string& text, const std::string& flag, bool allow_zero) {
  const auto values = parse_double_list(text, flag);
  for (double v : values) {
    const bool ok = allow_zero ? (v >= 0.0 && v <= 1.0) : (v > 0.0 && v <= 1.0);
    if (!ok) throw UsageError(flag + " value " + format_double(v) + " out of range");
  }
  return values;
}

void validate_kind(const StrategyKind& kind) {
  try {
    validate(kind);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

std::vector<double> default_load_factors() {
  std::vector<double> grid;
  for (int pct = 10; pct <= 95; pct += 5) grid.push_back(pct / 100.0);
  return grid;
}

StrategyKind make_strategy(const std::string& name, const StrategyParams& params) {
  if (name == "random") return RandomParams{};
  if (name == "bathroom") return params.bathroom;
  if (name == "elastic") return params.elastic;
  if (name == "funnel") return params.funnel;
  throw UsageError("unknown strategy '" + name + "'");
}

BenchConfig parse_bench_args(const std::vector<std::string>& args) {
  std::string config_path;
  const RawOptions flags = parse_flags("bench", kBenchFlags, args, &config_path);
  RawOptions raw;
  if (!config_path.empty()) raw = read_config_file(config_path, kBenchFlags);
  for (const auto& [k, v] : flags) raw[k] = v;

  BenchConfig c;
  if (auto it = raw.find("strategies"); it != raw.end()) {
    c.strategies = split(it->second, ',');
    std::set<std::string> seen;
    for (const auto& s : c.strategies) {
      make_strategy(s, c.params);
      if (!seen.insert(s).second) throw UsageError("strategy '" + s + "' listed twice");
    }
  }
  c.entries = positive(raw, "entries", c.entries);
  if (auto it = raw.find("load-factors"); it != raw.end()) {
    c.load_factors = fractions(it->second, "--load-factors", false);
  }
  c.trials = positive(raw, "trials", c.trials);
  if (auto it = raw.find("seed"); it != raw.end()) c.seed = parse_unsigned(it->second, "--seed");
  if (auto it = raw.find("mode"); it != raw.end()) {
    if (it->second == "fixed-n") {
      c.mode = SizingMode::kFixedN;
    } else if (it->second == "fixed-m") {
      c.mode = SizingMode::kFixedM;
    } else {
      throw UsageError("--mode must be fixed-n or fixed-m");
    }
  }
  if (auto it = raw.find("table-size"); it != raw.end()) {
    c.table_size = static_cast<std::size_t>(parse_unsigned(it->second, "--table-size"));
  }
  if (c.mode == SizingMode::kFixedM && (c.table_size < 2 || !is_prime(c.table_size))) {
    throw UsageError("fixed-m mode needs a prime --table-size >= 2");
  }
  if (auto it = raw.find("unsuccessful"); it != raw.end()) {
    c.unsuccessful = parse_double(it->second, "--unsuccessful");
    if (!(c.unsuccessful >= 0.0 && c.unsuccessful <= 1.0)) {
      throw UsageError("--unsuccessful must lie in [0,1]");
    }
  }
  c.params.bathroom.theta = positive(raw, "theta", c.params.bathroom.theta);
  c.params.bathroom.delta = positive(raw, "delta", c.params.bathroom.delta);
  c.params.bathroom.growth = parse_growth(raw, c.params.bathroom.growth);
  c.params.elastic.t1 = positive(raw, "elastic-t1", c.params.elastic.t1);
  c.params.elastic.t2 = positive(raw, "elastic-t2", c.params.elastic.t2);
  c.params.funnel.levels =
      static_cast<std::uint32_t>(positive(raw, "funnel-levels", c.params.funnel.levels));
  if (auto it = raw.find("funnel-shrink"); it != raw.end()) {
    c.params.funnel.shrink = parse_double(it->second, "--funnel-shrink");
  }
  c.params.funnel.budget_beta = positive(raw, "funnel-beta", c.params.funnel.budget_beta);
  for (const auto& s : c.strategies) validate_kind(make_strategy(s, c.params));

  if (auto it = raw.find("threads"); it != raw.end()) {
    c.threads = static_cast<unsigned>(parse_unsigned(it->second, "--threads"));
  }
  if (auto it = raw.find("out"); it != raw.end()) c.out = it->second;
  if (auto it = raw.find("hist"); it != raw.end()) c.hist = it->second;
  if (auto it = raw.find("report"); it != raw.end()) c.report = it->second;
  return c;
}

SimConfig parse_sim_args(const std::vector<std::string>& args) {
  const RawOptions raw = parse_flags("sim", kSimFlags, args, nullptr);
  SimConfig c;
  c.size = positive(raw, "size", c.size);
  if (auto it = raw.find("occupancy"); it != raw.end()) {
    c.occupancies = fractions(it->second, "--occupancy", true);
  }
  c.params.theta = positive(raw, "theta", c.params.theta);
  c.params.delta = positive(raw, "delta", c.params.delta);
  c.params.growth = parse_growth(raw, c.params.growth);
  c.trials = positive(raw, "trials", c.trials);
  if (auto it = raw.find("seed"); it != raw.end()) c.seed = parse_unsigned(it->second, "--seed");
  if (auto it = raw.find("out"); it != raw.end()) c.out = it->second;
  return c;
}

PlotConfig parse_plot_args(const std::vector<std::string>& args) {
  const RawOptions raw = parse_flags("plot", kPlotFlags, args, nullptr);
  PlotConfig c;
  if (auto it = raw.find("in"); it != raw.end()) c.in = it->second;
  if (auto it = raw.find("out"); it != raw.end()) c.out = it->second;
  if (auto it = raw.find("metric"); it != raw.end()) c.metric = it->second;
  if (auto it = raw.find("op-kind"); it != raw.end()) c.op_kind = it->second;
  static const std::set<std::string> kMetrics = {"mean_probes", "stddev_probes", "max_probes",
                                                 "p99_probes",  "mem_bytes",     "wall_nanos"};
  if (!kMetrics.contains(c.metric)) throw UsageError("unknown --metric '" + c.metric + "'");
  return c;
}

VerifyConfig parse_verify_args(const std::vector<std::string>& args) {
  const RawOptions raw = parse_flags("verify", kVerifyFlags, args, nullptr);
  VerifyConfig c;
  if (auto it = raw.find("suite"); it != raw.end()) c.suite = it->second;
  if (auto it = raw.find("seed"); it != raw.end()) c.seed = parse_unsigned(it->second, "--seed");
  static const std::set<std::string> kSuites = {"all", "oracle", "permutation",
                                                "reduction", "sim", "metrics"};
  if (!kSuites.contains(c.suite)) throw UsageError("unknown --suite '" + c.suite + "'");
  return c;
}

}  // namespace adaprobe::harness
