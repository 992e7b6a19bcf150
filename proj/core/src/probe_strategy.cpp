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

#include "adaprobe/probe_strategy.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "adaprobe/error.hpp"

namespace adaprobe {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::size_t level_step(std::uint64_t h2, std::size_t length) noexcept {
  return length > 1 ? static_cast<std::size_t>(1 + h2 % (length - 1)) : 1;
}

std::size_t level_home(std::uint64_t h1, std::size_t level, const Level& lv) noexcept {
  // Level 0 uses h1 directly; deeper levels re-mix so they decorrelate.
  const std::uint64_t h = level == 0 ? h1 : mix64(h1 + level);
  return lv.offset + static_cast<std::size_t>(h % lv.length);
}

}  // namespace

std::string_view strategy_name(const StrategyKind& kind) noexcept {
  return std::visit(Overloaded{
                        [](const RandomParams&) { return std::string_view("random"); },
                        [](const AdaptiveParams&) { return std::string_view("bathroom"); },
                        [](const ElasticParams&) { return std::string_view("elastic"); },
                        [](const FunnelParams&) { return std::string_view("funnel"); },
                    },
                    kind);
}

void validate(const StrategyKind& kind) {
  std::visit(Overloaded{
                 [](const RandomParams&) {},
                 [](const AdaptiveParams& p) {
                   if (p.theta < 1) throw Error(ErrorCode::kInvalidParams, "theta must be >= 1");
                   if (p.delta < 1) throw Error(ErrorCode::kInvalidParams, "delta must be >= 1");
                 },
                 [](const ElasticParams& p) {
                   if (p.t1 < 1 || p.t2 <= p.t1) {
                     throw Error(ErrorCode::kInvalidParams, "elastic thresholds need 1 <= t1 < t2");
                   }
                 },
                 [](const FunnelParams& p) {
                   if (p.levels < 2) throw Error(ErrorCode::kInvalidParams, "funnel needs >= 2 levels");
                   if (!(p.shrink > 0.0 && p.shrink < 1.0)) {
                     throw Error(ErrorCode::kInvalidParams, "funnel shrink must lie in (0,1)");
                   }
                   if (p.budget_beta < 1) {
                     throw Error(ErrorCode::kInvalidParams, "funnel budget_beta must be >= 1");
                   }
                 },
             },
             kind);
}

Region elastic_region(std::uint64_t probe_index, const ElasticParams& params) {
  if (probe_index < 1) throw Error(ErrorCode::kContractViolation, "probe index starts at 1");
  if (probe_index <= params.t1) return Region::kA;
  if (probe_index <= params.t2) return Region::kB;
  return Region::kC;
}

std::vector<Level> funnel_levels(std::size_t m, const FunnelParams& params) {
  validate(params);
  if (m < params.levels) {
    throw Error(ErrorCode::kInvalidParams,
                "funnel needs m >= levels (m=" + std::to_string(m) + ")");
  }
  std::vector<Level> out;
  out.reserve(params.levels);
  std::size_t offset = 0;
  std::size_t length = static_cast<std::size_t>(std::floor(static_cast<double>(m) * params.shrink));
  if (length == 0) throw Error(ErrorCode::kInvalidParams, "funnel level 0 would be empty");
  for (std::uint32_t i = 0; i + 1 < params.levels; ++i) {
    if (offset + length >= m) {
      throw Error(ErrorCode::kInvalidParams, "funnel final level would be empty");
    }
    out.push_back({offset, length});
    offset += length;
    length = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(static_cast<double>(length) * params.shrink)));
  }
  out.push_back({offset, m - offset});
  return out;
}

std::size_t normalize_step(std::uint64_t step, std::size_t modulus) noexcept {
  if (modulus < 3) return 1;
  const std::uint64_t span = modulus - 1;
  // step >= 1 is assumed; step 0 maps to span, the same as (0 - 1) mod span + 1.
  return static_cast<std::size_t>((step + span - 1) % span + 1);
}

std::size_t base_step(std::uint64_t h2, std::size_t modulus) noexcept {
  if (modulus < 3) return 1;
  return static_cast<std::size_t>(1 + h2 % (modulus - 1));
}

ProbeState adaptive_update(ProbeState state, Observation obs, const AdaptiveParams& params,
                           std::size_t modulus) {
  if (is_occupied_class(obs)) {
    state.consecutive += 1;
    if (state.consecutive >= params.theta) {
      if (params.growth == Growth::kAdditive) {
        // (d - 1 + delta) mod (modulus - 1) + 1 without overflowing on large delta.
        if (modulus >= 3) {
          const std::uint64_t span = modulus - 1;
          state.step = static_cast<std::size_t>((state.step - 1 + params.delta % span) % span + 1);
        } else {
          state.step = 1;
        }
      } else {
        state.step = normalize_step(2 * static_cast<std::uint64_t>(state.step), modulus);
      }
      state.consecutive = 0;
    }
  } else if (obs == Observation::kEmpty) {
    state.consecutive = 0;
    if (params.growth == Growth::kAdditive) {
      state.step = state.step > params.delta ? static_cast<std::size_t>(state.step - params.delta) : 1;
    } else {
      state.step = std::max<std::size_t>(1, state.step / 2);
    }
  }
  return state;
}

ProbeStrategy::ProbeStrategy(StrategyKind kind, std::size_t capacity)
    : kind_(std::move(kind)), capacity_(capacity) {
  if (capacity_ < 2) throw Error(ErrorCode::kInvalidParams, "capacity must be >= 2");
  validate(kind_);
  if (const auto* funnel = std::get_if<FunnelParams>(&kind_)) {
    levels_ = funnel_levels(capacity_, *funnel);
  }
}

ProbeState ProbeStrategy::start(const HashPair& hashes) const {
  ProbeState st;
  st.h1 = hashes.h1;
  st.h2 = hashes.h2;
  st.base = base_step(hashes.h2, capacity_);
  if (!levels_.empty()) {
    st.home = level_home(hashes.h1, 0, levels_[0]);
    st.base = level_step(hashes.h2, levels_[0].length);
    st.step = st.base;
  } else {
    st.home = static_cast<std::size_t>(hashes.h1 % capacity_);
    st.step = std::holds_alternative<ElasticParams>(kind_) ? 1 : st.base;
  }
  st.current_slot = st.home;
  return st;
}

StepResult ProbeStrategy::next(ProbeState& state, Observation obs) const {
  if (state.exhausted) {
    throw Error(ErrorCode::kContractViolation, "probe_next called after Exhausted");
  }
  if (obs == Observation::kMatch) {
    throw Error(ErrorCode::kContractViolation, "a match ends the probe sequence");
  }
  state.probes_made += 1;
  if (state.probes_made >= capacity_) {
    state.exhausted = true;
    return std::nullopt;
  }
  const std::size_t m = capacity_;
  std::visit(Overloaded{
                 [&](const RandomParams&) {
                   state.current_slot = (state.current_slot + state.step) % m;
                 },
                 [&](const AdaptiveParams& p) {
                   state = adaptive_update(state, obs, p, m);
                   state.current_slot = (state.current_slot + state.step) % m;
                 },
                 [&](const ElasticParams& p) {
                   // The region of the probe just observed picks the stride to the next one.
                   const std::uint64_t index = state.probes_made;
                   switch (elastic_region(index, p)) {
                     case Region::kA: state.step = 1; break;
                     case Region::kB: state.step = state.base; break;
                     case Region::kC: state.step = normalize_step(index * index, m); break;
                   }
                   state.current_slot = (state.current_slot + state.step) % m;
                 },
                 [&](const FunnelParams&) { state.current_slot = advance_funnel(state); },
             },
             kind_);
  return state.current_slot;
}

std::size_t ProbeStrategy::advance_funnel(ProbeState& state) const {
  const auto& params = std::get<FunnelParams>(kind_);
  const bool last = state.level + 1 == levels_.size();
  state.level_probes += 1;
  if (!last && state.level_probes >= params.budget_beta) {
    state.level += 1;
    state.level_probes = 0;
    const Level& lv = levels_[state.level];
    // The last level is a linear scan; earlier ones double-hash with their own stride.
    state.step = state.level + 1 == levels_.size()
                     ? 1
                     : level_step(mix64(state.h2 + state.level), lv.length);
    return level_home(state.h1, state.level, lv);
  }
  const Level& lv = levels_[state.level];
  const std::size_t local = state.current_slot - lv.offset;
  return lv.offset + (local + state.step) % lv.length;
}

std::size_t ProbeStrategy::metadata_bytes() const noexcept {
  return std::visit(Overloaded{
                        [](const RandomParams&) -> std::size_t { return 0; },
                        [](const AdaptiveParams&) -> std::size_t { return 32; },
                        [](const ElasticParams&) -> std::size_t { return 24; },
                        [](const FunnelParams& p) -> std::size_t { return 16 + 16 * std::size_t{p.levels}; },
                    },
                    kind_);
}

}  // namespace adaprobe
