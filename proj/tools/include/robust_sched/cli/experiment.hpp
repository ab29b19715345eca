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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robust_sched/datagen.hpp"
#include "robust_sched/heuristics.hpp"
#include "robust_sched/rational.hpp"

namespace robust_sched::cli {

/// One experiment grid: every (n, m) cell is solved by every algorithm once per
/// repetition. Repetition k uses seed `seed_base + k`: a base instance with the
/// largest n and m of the grid is generated from that seed and every cell is
/// derived from it, so all cells of a repetition share data.
struct ExperimentPlan {
  std::string dataset = "ds1";       // "ds1", "ds2" or "custom"
  std::optional<GenParams> custom;   // required when dataset == "custom"
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> m_values;
  std::vector<Algorithm> algorithms;
  BoundMode bound_mode = BoundMode::kFull;
  std::size_t repetitions = 1;
  std::uint64_t seed_base = 1;

  /// Throws InvalidArgument on empty grids or zero repetitions.
  void validate() const;
};

struct BenchRow {
  std::string dataset;
  std::size_t n = 0;
  std::size_t m = 0;
  Algorithm algorithm = Algorithm::kPartialMakespan;
  BoundMode bound_mode = BoundMode::kFull;
  std::uint64_t seed = 0;
  Rational relaxed_regret;
  double wall_ms = 0.0;  // solver call only, monotonic clock
};

/// Rows ordered by (n, m, algorithm, seed) whatever the worker count.
/// `threads` == 0 uses ROBUST_SCHED_THREADS or the hardware concurrency.
[[nodiscard]] std::vector<BenchRow> run_experiment(const ExperimentPlan& plan,
                                                   std::size_t threads = 0);

/// Parameters of the base instance shared by one repetition.
[[nodiscard]] GenParams base_params(const ExperimentPlan& plan, std::uint64_t seed);

inline constexpr const char* kCsvHeader =
    "dataset,n,m,algorithm,boundMode,seed,relaxedRegret,wallMs";

[[nodiscard]] std::string to_csv(const std::vector<BenchRow>& rows);

/// Mean relaxed regret and mean wall time per (n, m, algorithm), laid out
/// with n as rows and one column group per m.
[[nodiscard]] std::string to_markdown(const std::vector<BenchRow>& rows);

/// Worker count from ROBUST_SCHED_THREADS, else hardware concurrency (>= 1).
[[nodiscard]] std::size_t default_threads();

}  // namespace robust_sched::cli
