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

// Reference interpretation of the adaptive search. Written independently of
// simulate_search: no shared helpers, steps wrap by repeated subtraction and
// growth is applied one unit at a time.

#include <string>

#include "adaprobe/error.hpp"
#include "adaprobe/stall_sim.hpp"

namespace adaprobe {

namespace {

bool wanted(const Board& board, std::size_t index, const SearchPredicate& predicate) {
  const bool vacant = !board.cells[index].has_value();
  if (const auto* id = std::get_if<FindId>(&predicate)) {
    return !vacant && board.cells[index].value() == id->id;
  }
  return vacant;
}

std::size_t grow(std::size_t d, const AdaptiveParams& p, std::size_t n) {
  if (n <= 2) return 1;
  const std::size_t largest = n - 1;
  if (p.growth == Growth::kMultiplicative) {
    std::size_t doubled = d + d;
    while (doubled > largest) doubled -= largest;
    return doubled;
  }
  const std::uint64_t units = p.delta % largest;
  for (std::uint64_t i = 0; i < units; ++i) {
    d += 1;
    if (d > largest) d = 1;
  }
  return d;
}

std::size_t shrink(std::size_t d, const AdaptiveParams& p) {
  if (p.growth == Growth::kMultiplicative) return d / 2 == 0 ? 1 : d / 2;
  if (p.delta >= d) return 1;
  return d - static_cast<std::size_t>(p.delta);
}

}  // namespace

SimResult oracle_search(const Board& board, std::size_t start, std::size_t d0,
                        const SearchPredicate& predicate, const AdaptiveParams& params) {
  const std::size_t n = board.cells.size();
  if (n == 0 || start >= n) throw Error(ErrorCode::kInvalidStart, "start outside board");
  if (d0 == 0 || d0 > (n == 1 ? 1 : n - 1)) throw Error(ErrorCode::kInvalidParams, "bad d0");
  if (params.theta == 0 || params.delta == 0) throw Error(ErrorCode::kInvalidParams, "bad params");

  SimResult out;
  std::size_t position = start;
  std::size_t d = d0;
  std::uint64_t run = 0;

  for (std::size_t probe = 1; probe <= n; ++probe) {
    out.trace.push_back(position);
    out.steps.push_back(d);
    if (wanted(board, position, predicate)) {
      out.found_index = position;
      out.probes = probe;
      return out;
    }
    if (board.cells[position].has_value()) {
      run = run + 1;
      if (run >= params.theta) {
        d = grow(d, params, n);
        run = 0;
      }
    } else {
      run = 0;
      d = shrink(d, params);
    }
    position = position + d;
    while (position >= n) position -= n;
  }

  out.fallback_used = true;
  std::size_t cursor = start;
  for (std::size_t k = 0; k < n; ++k) {
    cursor = cursor + 1 == n ? 0 : cursor + 1;
    out.trace.push_back(cursor);
    if (wanted(board, cursor, predicate)) {
      out.found_index = cursor;
      break;
    }
  }
  out.probes = out.trace.size();
  return out;
}

}  // namespace adaprobe
