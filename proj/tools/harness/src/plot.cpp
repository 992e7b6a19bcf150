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

#include "adaprobe/harness/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "adaprobe/harness/bench.hpp"
#include "adaprobe/harness/common.hpp"

namespace adaprobe::harness {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 440;
constexpr double kLeft = 80;
constexpr double kRight = 560;
constexpr double kTop = 50;
constexpr double kBottom = 380;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string axis_label(const std::string& metric) {
  if (metric == "mean_probes") return "mean probes per operation";
  if (metric == "stddev_probes") return "stddev of probes per operation";
  if (metric == "max_probes") return "worst-case probes";
  if (metric == "p99_probes") return "p99 probes";
  if (metric == "mem_bytes") return "accounted memory (bytes)";
  return "wall time (ns)";
}

// Rounds up to 1, 2 or 5 times a power of ten.
double nice_ceiling(double v) {
  if (v <= 0) return 1;
  const double p = std::pow(10.0, std::floor(std::log10(v)));
  for (double f : {1.0, 2.0, 5.0, 10.0}) {
    if (f * p >= v) return f * p;
  }
  return 10 * p;
}

struct Series {
  std::string name;
  std::map<double, std::pair<double, std::size_t>> points;  // alpha -> (sum, n)
};

}  // namespace

std::string render_plot(std::string_view results_csv, const std::string& metric,
                        const std::string& op_kind) {
  std::vector<std::string> lines = split(results_csv, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kResultsHeader) {
    throw UsageError("input is not a results CSV (header mismatch)");
  }
  const auto header = split(lines.front(), ',');
  const auto column = static_cast<std::size_t>(
      std::find(header.begin(), header.end(), metric) - header.begin());
  if (column == header.size()) throw UsageError("unknown metric column '" + metric + "'");

  std::vector<Series> series;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    if (fields.size() != header.size()) {
      throw UsageError("row " + std::to_string(i + 1) + " has " + std::to_string(fields.size()) +
                       " fields");
    }
    if (fields[6] != op_kind) continue;
    const double alpha = parse_double(fields[2], "target_alpha");
    const double value = parse_double(fields[column], metric);
    auto it = std::find_if(series.begin(), series.end(),
                           [&](const Series& s) { return s.name == fields[0]; });
    if (it == series.end()) {
      series.push_back({fields[0], {}});
      it = series.end() - 1;
    }
    auto& [sum, n] = it->points[alpha];
    sum += value;
    ++n;
  }
  if (series.empty()) throw UsageError("no rows with op_kind " + op_kind);

  double x_min = 1.0;
  double x_max = 0.0;
  double y_max = 0.0;
  for (const Series& s : series) {
    for (const auto& [alpha, acc] : s.points) {
      x_min = std::min(x_min, alpha);
      x_max = std::max(x_max, alpha);
      y_max = std::max(y_max, acc.first / static_cast<double>(acc.second));
    }
  }
  if (x_max - x_min < 1e-9) {
    x_min -= 0.05;
    x_max += 0.05;
  }
  y_max = nice_ceiling(y_max);
  auto sx = [&](double a) { return kLeft + (a - x_min) / (x_max - x_min) * (kRight - kLeft); };
  auto sy = [&](double v) { return kBottom - v / y_max * (kBottom - kTop); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fixed((kLeft + kRight) / 2) << "\" y=\"28\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << metric << " vs load factor (" << op_kind
      << ")</text>\n";
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(kBottom) << "\" x2=\""
      << fixed(kRight) << "\" y2=\"" << fixed(kBottom) << "\"/>\n";
  svg << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(kTop) << "\" x2=\"" << fixed(kLeft)
      << "\" y2=\"" << fixed(kBottom) << "\"/>\n";
  svg << "</g>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double a = x_min + (x_max - x_min) * i / 4.0;
    const double y = y_max * i / 4.0;
    svg << "<text x=\"" << fixed(sx(a)) << "\" y=\"" << fixed(kBottom + 16)
        << "\" text-anchor=\"middle\">" << fixed(a) << "</text>\n";
    svg << "<text x=\"" << fixed(kLeft - 6) << "\" y=\"" << fixed(sy(y) + 4)
        << "\" text-anchor=\"end\">" << format_double(y) << "</text>\n";
  }
  svg << "<text x=\"" << fixed((kLeft + kRight) / 2) << "\" y=\"" << fixed(kBottom + 40)
      << "\" text-anchor=\"middle\">load factor (target alpha)</text>\n";
  svg << "<text x=\"20\" y=\"" << fixed((kTop + kBottom) / 2) << "\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 20 " << fixed((kTop + kBottom) / 2) << ")\">"
      << axis_label(metric) << "</text>\n";
  svg << "</g>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    svg << "<polyline data-strategy=\"" << series[i].name << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& [alpha, acc] : series[i].points) {
      if (!first) svg << ' ';
      first = false;
      svg << fixed(sx(alpha)) << ',' << fixed(sy(acc.first / static_cast<double>(acc.second)));
    }
    svg << "\"/>\n";
    const double ly = kTop + 10 + 20.0 * static_cast<double>(i);
    svg << "<line x1=\"580\" y1=\"" << fixed(ly) << "\" x2=\"605\" y2=\"" << fixed(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"612\" y=\"" << fixed(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[i].name << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace adaprobe::harness
