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

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "adaprobe/table.hpp"

namespace adaprobe::harness {

// The map the oracle suite drives. The default wraps Table directly; tests
// substitute deliberately broken variants to check the suite catches them.
class MapUnderTest {
 public:
  virtual ~MapUnderTest() = default;
  virtual InsertOutcome insert(std::uint64_t key, std::uint64_t value) = 0;
  virtual LookupOutcome lookup(std::uint64_t key) const = 0;
  virtual DeleteOutcome erase(std::uint64_t key) = 0;
  virtual const Table& table() const = 0;
};

using MapFactory = std::function<std::unique_ptr<MapUnderTest>(const TableConfig&)>;

MapFactory table_factory();

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string detail;  // summary on success, reproducer on failure
};

// Suites: "oracle", "permutation", "reduction", "sim", "metrics", or "all".
std::vector<SuiteResult> run_verify(const std::string& suite, std::uint64_t seed,
                                    const MapFactory& factory = table_factory());

// Individual suites, exposed for tests.
SuiteResult verify_oracle(std::uint64_t seed, const MapFactory& factory,
                          std::size_t ops_per_run = 100000);
SuiteResult verify_permutation(std::uint64_t seed);
SuiteResult verify_reduction(std::uint64_t seed);
SuiteResult verify_sim(std::uint64_t seed);
SuiteResult verify_metrics(std::uint64_t seed);

}  // namespace adaprobe::harness
