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

#include <vector>

#include "robust_sched/evaluation.hpp"
#include "robust_sched/instance.hpp"
#include "robust_sched/schedule.hpp"

namespace robust_sched {

/// Size and time caps for the exact enumerations. Checked before any work
/// starts; sizes above the caps throw LimitExceeded.
struct OracleLimits {
  std::size_t max_jobs = 8;
  std::size_t max_machines = 3;
  double time_budget_seconds = 60.0;
};

struct OptimalMakespan {
  Time value = 0;
  Schedule schedule;
  bool certified = true;  // false if the time budget ran out
};

struct OracleOptions {
  /// Branch-and-bound pruning. Disabling it must not change any result.
  bool prune = true;
};

/// Exact optimum of the deterministic problem under `r`.
///
/// Enumerates job-to-machine assignments; jobs on one machine run in
/// nondecreasing release order (earliest-release-first is optimal for a single
/// machine with release dates), so every assignment is evaluated at its best
/// sequencing. Among optimal schedules, the first in depth-first order
/// (machine 0 tried first, jobs in release order) is returned.
[[nodiscard]] OptimalMakespan optimal_makespan(const Instance& inst, const Scenario& r,
                                               const OracleLimits& lim = {},
                                               OracleOptions opts = {});

/// Z(s) = max over effective extreme scenarios of makespan(s, r) - optimum(r).
/// With `all_extreme` every one of the n extreme scenarios is evaluated.
[[nodiscard]] RegretReport exact_worst_case_regret(const Schedule& s, const Instance& inst,
                                                   const OracleLimits& lim = {},
                                                   bool all_extreme = false);

inline constexpr std::size_t kMaxGridScenarios = 2'000'000;

/// Regret maximized over the Cartesian grid with `grid_points` evenly spaced
/// integer values per interval (endpoints included, interior points rounded
/// half up, duplicates dropped). Independent of the extreme-scenario reduction.
/// `per_scenario` and `scenario_job` are left empty. Throws LimitExceeded when
/// the grid has more than `kMaxGridScenarios` points.
[[nodiscard]] RegretReport grid_regret(const Schedule& s, const Instance& inst,
                                       std::size_t grid_points, const OracleLimits& lim = {});

/// Grid values used by grid_regret for one interval.
[[nodiscard]] std::vector<Time> grid_values(const ReleaseInterval& interval,
                                            std::size_t grid_points);

struct MinRegretResult {
  Schedule schedule;
  Time regret = 0;
  bool certified = true;
};

/// Schedule minimizing the exact worst-case regret, by enumeration of every
/// sequence-form schedule. First optimum in enumeration order wins.
[[nodiscard]] MinRegretResult exhaustive_min_regret(const Instance& inst,
                                                    const OracleLimits& lim = {},
                                                    OracleOptions opts = {});

}  // namespace robust_sched
