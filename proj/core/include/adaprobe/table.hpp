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
#include <optional>
#include <span>
#include <vector>

#include "adaprobe/probe_strategy.hpp"

namespace adaprobe {

// Accounted bytes per slot: 8 key + 8 value + 1 state tag.
inline constexpr std::size_t kSlotRecordBytes = 17;

struct TableConfig {
  std::size_t capacity = 0;  // m, must be prime and >= 2
  StrategyKind strategy = RandomParams{};
  std::uint64_t hash_seed = 0;
};

enum class SlotTag : std::uint8_t { kEmpty, kOccupied, kTombstone };

struct Slot {
  std::uint64_t key = 0;
  std::uint64_t value = 0;
  SlotTag tag = SlotTag::kEmpty;
};

struct InsertOutcome {
  enum class Status { kInserted, kUpdated, kTableFull };
  Status status;
  std::size_t probes;
};

struct LookupOutcome {
  std::optional<std::uint64_t> value;
  std::size_t probes;

  bool found() const noexcept { return value.has_value(); }
};

struct DeleteOutcome {
  bool deleted;
  std::size_t probes;
};

struct ProbeTrace {
  std::vector<std::size_t> slots_visited;
  std::optional<std::size_t> sweep_start;  // index into slots_visited
};

// Fixed-capacity open-addressing map from 64-bit keys to 64-bit values.
//
// Every operation walks the same path for a key: up to m slots chosen by the
// strategy, then a linear sweep of all m slots starting at (home + 1) mod m.
// Deleted slots become tombstones, which count as occupied while probing, so
// the observations a key saw when it was inserted are the observations every
// later lookup sees. The table never resizes.
//
// Single owner; no internal synchronization.
class Table {
 public:
  explicit Table(TableConfig config);

  InsertOutcome insert(std::uint64_t key, std::uint64_t value);
  LookupOutcome lookup(std::uint64_t key) const;
  DeleteOutcome erase(std::uint64_t key);

  // Replays the lookup path without mutating anything.
  ProbeTrace probe_trace(std::uint64_t key) const;

  double load_factor() const noexcept {
    return static_cast<double>(occupied_) / static_cast<double>(slots_.size());
  }
  std::size_t memory_footprint() const noexcept {
    return slots_.size() * kSlotRecordBytes + strategy_.metadata_bytes();
  }

  std::size_t capacity() const noexcept { return slots_.size(); }
  std::size_t size() const noexcept { return occupied_; }
  std::size_t tombstones() const noexcept { return tombstones_; }
  std::span<const Slot> slots() const noexcept { return slots_; }
  const TableConfig& config() const noexcept { return config_; }
  const ProbeStrategy& strategy() const noexcept { return strategy_; }

 private:
  struct PathEnd {
    enum class Kind { kMatch, kEmpty, kExhausted };
    Kind kind;
    std::size_t slot;
    std::size_t probes;
    std::optional<std::size_t> first_tombstone;
  };

  PathEnd walk(std::uint64_t key, ProbeTrace* trace) const;

  TableConfig config_;
  ProbeStrategy strategy_;
  std::vector<Slot> slots_;
  std::size_t occupied_ = 0;
  std::size_t tombstones_ = 0;
};

}  // namespace adaprobe
