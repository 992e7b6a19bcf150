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

#include "adaprobe/harness/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "adaprobe/error.hpp"
#include "adaprobe/harness/bench.hpp"
#include "adaprobe/harness/common.hpp"
#include "adaprobe/harness/plot.hpp"

namespace adaprobe::harness {

namespace {

constexpr const char* kUsage =
    "usage: adaprobe <command> [options]\n"
    "\n"
    "commands:\n"
    "  bench    run the load-factor sweep and write results/histogram CSVs\n"
    "  verify   run the invariant and oracle suites\n"
    "  sim      run the stall simulator occupancy sweep\n"
    "  plot     render a results CSV as an SVG line chart\n"
    "\n"
    "run 'adaprobe <command> --help' for the options of a command.\n";

template <class Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  writer(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err) {
  BenchResults results;
  try {
    results = run_bench(config);
  } catch (const Error& e) {
    err << "adaprobe bench: invalid configuration: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "adaprobe bench: table check failed: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  const ComparisonReport report = compare_bathroom_random(results);
  try {
    write_file(config.out, [&](std::ostream& f) { write_results_csv(f, results); });
    write_file(config.hist, [&](std::ostream& f) { write_histogram_csv(f, results); });
    if (!config.report.empty()) {
      write_file(config.report, [&](std::ostream& f) { write_report(f, report, config); });
    }
  } catch (const IoError& e) {
    err << "adaprobe bench: " << e.what() << '\n';
    return kExitIo;
  }
  out << "wrote " << results.records.size() * results.op_kinds().size() << " rows to "
      << config.out << " and histogram to " << config.hist << "\n\n";
  write_report(out, report, config);
  return kExitOk;
}

int cmd_verify(const VerifyConfig& config, std::ostream& out, const MapFactory& factory) {
  bool ok = true;
  for (const SuiteResult& r : run_verify(config.suite, config.seed, factory)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

void write_sim_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSimHeader << '\n';
  for (const SweepRow& r : rows) {
    out << r.n << ',' << format_double(r.occupancy) << ',' << r.trials << ','
        << format_double(r.mean_probes) << ',' << format_double(r.stddev_probes) << ','
        << r.max_probes << ',' << format_double(r.found_rate) << '\n';
  }
}

int cmd_sim(const SimConfig& config, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  spec.n = config.size;
  spec.occupancies = config.occupancies;
  spec.trials = config.trials;
  spec.seed = config.seed;
  spec.params = config.params;
  std::vector<SweepRow> rows;
  try {
    rows = occupancy_sweep(spec);
  } catch (const Error& e) {
    err << "adaprobe sim: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    write_file(config.out, [&](std::ostream& f) { write_sim_csv(f, rows); });
  } catch (const IoError& e) {
    err << "adaprobe sim: " << e.what() << '\n';
    return kExitIo;
  }
  write_sim_csv(out, rows);
  return kExitOk;
}

int cmd_plot(const PlotConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream in(config.in, std::ios::binary);
  if (!in) {
    err << "adaprobe plot: cannot open '" << config.in << "'\n";
    return kExitIo;
  }
  std::stringstream text;
  text << in.rdbuf();
  std::string svg;
  try {
    svg = render_plot(text.str(), config.metric, config.op_kind);
  } catch (const UsageError& e) {
    err << "adaprobe plot: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    write_file(config.out, [&](std::ostream& f) { f << svg; });
  } catch (const IoError& e) {
    err << "adaprobe plot: " << e.what() << '\n';
    return kExitIo;
  }
  out << "wrote " << config.out << '\n';
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return kExitUsage;
  }
  const std::string& command = args.front();
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  try {
    if (command == "bench") return cmd_bench(parse_bench_args(rest), out, err);
    if (command == "verify") return cmd_verify(parse_verify_args(rest), out);
    if (command == "sim") return cmd_sim(parse_sim_args(rest), out, err);
    if (command == "plot") return cmd_plot(parse_plot_args(rest), out, err);
    if (command == "--help" || command == "-h" || command == "help") {
      out << kUsage;
      return kExitOk;
    }
    err << "unknown command '" << command << "'\n" << kUsage;
    return kExitUsage;
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "adaprobe " << command << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace adaprobe::harness
