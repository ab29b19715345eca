// Copyright 2026 The robust_sched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "robust_sched/bounds.hpp"
#include "robust_sched/datagen.hpp"
#include "robust_sched/evaluation.hpp"
#include "robust_sched/instance.hpp"
#include "robust_sched/schedule.hpp"

// JSON file formats. Job and machine indices are 0-based in every format.
//
//   Instance: {"m": int, "n": int, "p": [[int, ...], ...], "release": [[lo, hi], ...]}
//   Schedule: {"machines": [[job, ...], ...]}
//   Scenario: {"r": [int, ...]}
//
// Generated instances carry an extra "provenance" object with the generator
// params, seed and version; readers ignore it.
//
// Rational values are written as a JSON number plus an exact "num/den" string
// under the same key suffixed with "Exact".

namespace robust_sched::json_io {

[[nodiscard]] std::string write_instance(const Instance& inst);
[[nodiscard]] std::string write_instance(const Instance& inst, const GenParams& provenance);
[[nodiscard]] Instance read_instance(std::string_view text);

[[nodiscard]] std::string write_schedule(const Schedule& s);
[[nodiscard]] Schedule read_schedule(std::string_view text);

[[nodiscard]] std::string write_scenario(const Scenario& r);
[[nodiscard]] Scenario read_scenario(std::string_view text);

[[nodiscard]] std::string write_regret_report(const RegretReport& report, std::string_view mode);
/// Inverse of write_regret_report; returns the report and stores the mode.
[[nodiscard]] RegretReport read_regret_report(std::string_view text, std::string* mode = nullptr);

[[nodiscard]] std::string write_bounds_report(const BoundsReport& report);

/// Whole file into a string; throws Error on I/O failure.
[[nodiscard]] std::string read_file(const std::string& path);
/// Truncates `path` and writes `content`; throws Error on I/O failure.
void write_file(const std::string& path, std::string_view content);

}  // namespace robust_sched::json_io
