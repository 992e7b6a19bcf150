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
#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace adaprobe {

enum class OpKind { kInsert, kLookupHit, kLookupMiss, kDelete };

inline constexpr std::array<OpKind, 4> kAllOpKinds = {
    OpKind::kInsert, OpKind::kLookupHit, OpKind::kLookupMiss, OpKind::kDelete};

std::string_view to_string(OpKind kind) noexcept;

struct SummaryStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population
  std::uint64_t max = 0;
  std::uint64_t p99 = 0;  // nearest rank
};

// Streaming aggregate of one stream of probe counts. Sums are kept exactly
// (integer, 128-bit for the squares), so merging is order-insensitive.
class ProbeStats {
 public:
  // Throws Error(kContractViolation) for probes == 0.
  void record(std::uint64_t probes);
  void merge(const ProbeStats& other);

  SummaryStats summarize() const;

  // Ascending by probe count.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram() const;

  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t sum() const noexcept { return sum_; }
  std::uint64_t max() const noexcept { return max_; }
  const std::map<std::uint64_t, std::uint64_t>& distribution() const noexcept { return hist_; }

  friend bool operator==(const ProbeStats&, const ProbeStats&) = default;

 private:
  std::uint64_t count_ = 0;
  std::uint64_t sum_ = 0;
  unsigned __int128 sum_squares_ = 0;
  std::uint64_t max_ = 0;
  std::map<std::uint64_t, std::uint64_t> hist_;
};

// Per-operation-kind probe statistics for one trial (or a merge of trials).
class Recorder {
 public:
  void record(OpKind kind, std::uint64_t probes) { at(kind).record(probes); }
  void merge(const Recorder& other);

  SummaryStats summarize(OpKind kind) const { return at(kind).summarize(); }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram(OpKind kind) const {
    return at(kind).histogram();
  }
  const ProbeStats& stats(OpKind kind) const { return at(kind); }

  friend bool operator==(const Recorder&, const Recorder&) = default;

 private:
  ProbeStats& at(OpKind kind) { return streams_[static_cast<std::size_t>(kind)]; }
  const ProbeStats& at(OpKind kind) const { return streams_[static_cast<std::size_t>(kind)]; }

  std::array<ProbeStats, kAllOpKinds.size()> streams_;
};

Recorder merge(Recorder a, const Recorder& b);

}  // namespace adaprobe
