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

#include <string>
#include <string_view>

namespace adaprobe::harness {

// Renders `metric` against target load factor from results CSV text, one
// polyline per strategy, averaging the metric over trials for the given
// op_kind. Output bytes depend only on the inputs. Throws UsageError when the
// header does not match, a row is malformed, or no row matches op_kind.
std::string render_plot(std::string_view results_csv, const std::string& metric,
                        const std::string& op_kind);

}  // namespace adaprobe::harness
