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

#include <utility>
#include <vector>

#include "robust_sched/instance.hpp"
#include "robust_sched/schedule.hpp"

namespace robust_sched {

/// All release dates at their lower bounds.
[[nodiscard]] Scenario lower_scenario(const Instance& inst);

/// Extreme scenario of job j: r_j = hi_j, every other job at its lower bound.
/// The worst-case regret of any schedule is attained on one of these n
/// scenarios. Throws InvalidArgument if j >= n.
[[nodiscard]] Scenario extreme_scenario(const Instance& inst, JobIndex j);

/// Jobs whose whole release interval is covered by their predecessors: job j
/// at position k >= 2 on machine i with C[i][k-1] >= hi_j under the
/// lower-bound scenario. Their extreme scenarios can be skipped. Sorted ascending.
[[nodiscard]] std::vector<JobIndex> covered_jobs(const Schedule& s, const Instance& inst);

/// (j, extreme_scenario(j)) for every job not in covered_jobs(s), ascending j.
[[nodiscard]] std::vector<std::pair<JobIndex, Scenario>> effective_scenarios(
    const Schedule& s, const Instance& inst);

/// max over uncovered j of makespan(s, extreme_j) - (hi_j + min_i p[i][j]).
/// Upper bound on the exact worst-case regret; 0 if no job is uncovered.
[[nodiscard]] Time regret_upper_bound(const Schedule& s, const Instance& inst);

}  // namespace robust_sched
