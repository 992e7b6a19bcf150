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

#include "adaprobe/table.hpp"

#include <string>
#include <utility>

#include "adaprobe/error.hpp"
#include "adaprobe/workload.hpp"

namespace adaprobe {

namespace {

TableConfig checked(TableConfig config) {
  if (config.capacity < 2 || !is_prime(config.capacity)) {
    throw Error(ErrorCode::kNonPrimeCapacity,
                "table capacity " + std::to_string(config.capacity) + " is not a prime >= 2");
  }
  return config;
}

}  // namespace

Table::Table(TableConfig config)
    : config_(checked(std::move(config))),
      strategy_(config_.strategy, config_.capacity),
      slots_(config_.capacity) {}

Table::PathEnd Table::walk(std::uint64_t key, ProbeTrace* trace) const {
  const std::size_t m = slots_.size();
  std::optional<std::size_t> first_tombstone;
  std::size_t probes = 0;

  // One probe of `slot`.
  auto observe = [&](std::size_t slot) -> Observation {
    ++probes;
    if (trace != nullptr) trace->slots_visited.push_back(slot);
    const Slot& s = slots_[slot];
    switch (s.tag) {
      case SlotTag::kEmpty:
        return Observation::kEmpty;
      case SlotTag::kTombstone:
        if (!first_tombstone) first_tombstone = slot;
        return Observation::kTombstone;
      case SlotTag::kOccupied:
        break;
    }
    return s.key == key ? Observation::kMatch : Observation::kOccupiedOther;
  };
  auto finish = [&](Observation obs, std::size_t slot) {
    return PathEnd{obs == Observation::kMatch ? PathEnd::Kind::kMatch : PathEnd::Kind::kEmpty,
                   slot, probes, first_tombstone};
  };

  ProbeState state = strategy_.start(derive_hashes(key, config_.hash_seed));
  StepResult slot = state.current_slot;
  while (slot) {
    const Observation obs = observe(*slot);
    if (obs == Observation::kMatch || obs == Observation::kEmpty) return finish(obs, *slot);
    slot = strategy_.next(state, obs);
  }

  if (trace != nullptr) trace->sweep_start = trace->slots_visited.size();
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t s = (state.home + i) % m;
    const Observation obs = observe(s);
    if (obs == Observation::kMatch || obs == Observation::kEmpty) return finish(obs, s);
  }

  if (probes > 2 * m) {
    throw Error(ErrorCode::kContractViolation, "probe path exceeded 2m observations");
  }
  return PathEnd{PathEnd::Kind::kExhausted, 0, probes, first_tombstone};
}

InsertOutcome Table::insert(std::uint64_t key, std::uint64_t value) {
  const PathEnd end = walk(key, nullptr);
  switch (end.kind) {
    case PathEnd::Kind::kMatch:
      slots_[end.slot].value = value;
      return {InsertOutcome::Status::kUpdated, end.probes};
    case PathEnd::Kind::kEmpty: {
      // The walk reached an Empty slot, so the key is absent and the first
      // tombstone on the path (if any) can be reused.
      const std::size_t target = end.first_tombstone.value_or(end.slot);
      if (slots_[target].tag == SlotTag::kTombstone) --tombstones_;
      slots_[target] = Slot{key, value, SlotTag::kOccupied};
      ++occupied_;
      return {InsertOutcome::Status::kInserted, end.probes};
    }
    case PathEnd::Kind::kExhausted:
      break;
  }
  return {InsertOutcome::Status::kTableFull, end.probes};
}

LookupOutcome Table::lookup(std::uint64_t key) const {
  const PathEnd end = walk(key, nullptr);
  if (end.kind == PathEnd::Kind::kMatch) return {slots_[end.slot].value, end.probes};
  return {std::nullopt, end.probes};
}

DeleteOutcome Table::erase(std::uint64_t key) {
  const PathEnd end = walk(key, nullptr);
  if (end.kind != PathEnd::Kind::kMatch) return {false, end.probes};
  slots_[end.slot].tag = SlotTag::kTombstone;
  --occupied_;
  ++tombstones_;
  return {true, end.probes};
}

ProbeTrace Table::probe_trace(std::uint64_t key) const {
  ProbeTrace trace;
  walk(key, &trace);
  return trace;
}

}  // namespace adaprobe
