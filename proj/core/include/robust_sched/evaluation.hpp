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

#include <optional>
#include <vector>

#include "robust_sched/instance.hpp"
#include "robust_sched/rational.hpp"
#include "robust_sched/schedule.hpp"

namespace robust_sched {

/// Completion times C[i][k] of the k-th job on machine i, plus the makespan.
struct CompletionProfile {
  std::vector<std::vector<Time>> completion;
  Time makespan = 0;
};

/// C[i][k] = p[i][job] + max(C[i][k-1], r_job) with C[i][-1] = 0. Empty
/// machines contribute 0 to the makespan.
/// Precondition: `s` is valid for `inst` and `r` is feasible (unchecked here;
/// use require_valid / require_feasible at API boundaries).
[[nodiscard]] CompletionProfile completion_profile(const Schedule& s, const Scenario& r,
                                                   const Instance& inst);

/// Makespan only; same preconditions as completion_profile.
[[nodiscard]] Time makespan(const Schedule& s, const Scenario& r, const Instance& inst);

/// makespan(s, r) - reference. With a non-optimal reference the result can be
/// negative; it is not clamped.
[[nodiscard]] Time regret(const Schedule& s, const Scenario& r, const Instance& inst,
                          Time optimal_makespan);

/// Worst-case regret (exact or relaxed) with the achieving scenario.
struct RegretReport {
  struct Term {
    JobIndex job;     // extreme scenario index
    Rational regret;  // makespan minus reference under that scenario
  };

  Rational value;
  /// Job whose extreme scenario attains `value`; empty for grid searches.
  std::optional<JobIndex> scenario_job;
  Scenario scenario;
  std::vector<Term> per_scenario;
  /// False when an oracle hit its time budget and references are best-so-far.
  bool certified = true;
};

}  // namespace robust_sched
