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
#include <vector>

#include "robust_sched/instance.hpp"
#include "robust_sched/oracle.hpp"

namespace robust_sched::cli {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

/// Oracle-backed property battery for one small instance, run on the PM, PR
/// and PRE schedules:
///  - scenario reduction: grid regret equals the worst extreme-scenario regret
///    (skipped when n > `grid_max_jobs`)
///  - pruning: effective scenarios give the same worst-case regret as all n
///  - sandwich: 0 <= Z <= regret_upper_bound
///  - relaxation: relaxed regret >= Z
///  - bound validity on the lower-bound and every extreme scenario
///  - PM optimality when the disjoint or dominant-job detectors fire
/// Throws LimitExceeded if the instance is above `lim`.
[[nodiscard]] std::vector<CheckResult> run_property_checks(const Instance& inst,
                                                           const OracleLimits& lim,
                                                           std::size_t grid_points = 5,
                                                           std::size_t grid_max_jobs = 5);

}  // namespace robust_sched::cli
