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

#include <span>
#include <vector>

#include "robust_sched/evaluation.hpp"
#include "robust_sched/instance.hpp"
#include "robust_sched/rational.hpp"
#include "robust_sched/schedule.hpp"

namespace robust_sched {

/// Combinatorial lower bounds on the optimal makespan of the deterministic
/// problem under one scenario.
///
/// For an anchor job a let E_a = { t : r_t >= r_a } (jobs not available
/// before a) and q_t = min_i p[i][t]:
///   lb_avg = min_t r_t + (1/m) sum_t q_t
///   lb1    = max_t (r_t + q_t)
///   lb2    = max_a W_a,  W_a  = r_a + (1/m) sum_{t in E_a} q_t
///   lb3    = max_a W~_a, W~_a = r_a + ceil(|E_a| / m) * min_{t in E_a} q_t
/// `combined` = max(lb1, lb2, lb3); lb_avg is reported for diagnostics and is
/// always dominated by lb2 (take the anchor with the smallest release).
struct BoundsReport {
  struct Anchor {
    Rational w;        // W_a
    Time w_tilde = 0;  // W~_a
  };

  Rational lb_avg;
  Time lb1 = 0;
  Rational lb2;
  Time lb3 = 0;
  Rational combined;
  std::vector<Anchor> per_job;  // indexed by anchor job
};

[[nodiscard]] Rational lb_avg(const Scenario& r, const Instance& inst);
[[nodiscard]] Time lb1(const Scenario& r, const Instance& inst);
[[nodiscard]] Rational lb2(const Scenario& r, const Instance& inst);
[[nodiscard]] Time lb3(const Scenario& r, const Instance& inst);
[[nodiscard]] BoundsReport lb_combined(const Scenario& r, const Instance& inst);

/// LB(extreme_scenario(j)) for every job j, full job set.
[[nodiscard]] std::vector<Rational> extreme_lower_bounds(const Instance& inst);

struct RelaxedRegretOptions {
  /// Skip extreme scenarios of covered jobs. Off by default: the relaxed
  /// regret is defined over all n extreme scenarios.
  bool prune_covered = false;
};

/// max over extreme scenarios of makespan(s, r) - LB(r). Never below the
/// exact worst-case regret, since every LB is below the optimal makespan.
[[nodiscard]] RegretReport relaxed_regret(const Schedule& s, const Instance& inst,
                                          RelaxedRegretOptions options = {});

namespace detail {

/// Job as seen by the bounds: its release under the scenario and min_i p[i][t].
struct BoundItem {
  Time release;
  Time min_processing;
};

/// combined LB multiplied by `machines` (always an integer).
/// `items` must be sorted by release, descending. O(items.size()).
[[nodiscard]] Time scaled_combined_bound(std::span<const BoundItem> items, std::size_t machines);

}  // namespace detail

}  // namespace robust_sched
