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

#include "adaprobe/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "adaprobe/error.hpp"

namespace adaprobe {

std::string_view to_string(OpKind kind) noexcept {
  switch (kind) {
    case OpKind::kInsert: return "Insert";
    case OpKind::kLookupHit: return "LookupHit";
    case OpKind::kLookupMiss: return "LookupMiss";
    case OpKind::kDelete: return "Delete";
  }
  return "?";
}

void ProbeStats::record(std::uint64_t probes) {
  if (probes == 0) throw Error(ErrorCode::kContractViolation, "probe counts start at 1");
  ++count_;
  sum_ += probes;
  sum_squares_ += static_cast<unsigned __int128>(probes) * probes;
  max_ = std::max(max_, probes);
  ++hist_[probes];
}

void ProbeStats::merge(const ProbeStats& other) {
  count_ += other.count_;
  sum_ += other.sum_;
  sum_squares_ += other.sum_squares_;
  max_ = std::max(max_, other.max_);
  for (const auto& [probes, n] : other.hist_) hist_[probes] += n;
}

SummaryStats ProbeStats::summarize() const {
  SummaryStats s;
  s.count = count_;
  if (count_ == 0) return s;
  s.max = max_;
  const auto n = static_cast<long double>(count_);
  s.mean = static_cast<double>(static_cast<long double>(sum_) / n);
  // n * sum(x^2) - (sum x)^2 is exact and non-negative in 128-bit arithmetic.
  const unsigned __int128 scaled =
      static_cast<unsigned __int128>(count_) * sum_squares_ -
      static_cast<unsigned __int128>(sum_) * sum_;
  s.stddev = static_cast<double>(std::sqrt(static_cast<long double>(scaled)) / n);

  const std::uint64_t rank = (99 * count_ + 99) / 100;  // ceil(0.99 * count)
  std::uint64_t seen = 0;
  for (const auto& [probes, occurrences] : hist_) {
    seen += occurrences;
    if (seen >= rank) {
      s.p99 = probes;
      break;
    }
  }
  return s;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> ProbeStats::histogram() const {
  return {hist_.begin(), hist_.end()};
}

void Recorder::merge(const Recorder& other) {
  for (std::size_t i = 0; i < streams_.size(); ++i) streams_[i].merge(other.streams_[i]);
}

Recorder merge(Recorder a, const Recorder& b) {
  a.merge(b);
  return a;
}

}  // namespace adaprobe
