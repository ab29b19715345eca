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

#include "robust_sched/cli/checks.hpp"

#include <string>

#include "robust_sched/bounds.hpp"
#include "robust_sched/heuristics.hpp"
#include "robust_sched/scenarios.hpp"

namespace robust_sched::cli {
namespace {

CheckResult make(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, false, std::move(detail)};
}

CheckResult skipped(std::string name, std::string detail) {
  return {std::move(name), true, true, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> run_property_checks(const Instance& inst, const OracleLimits& lim,
                                             std::size_t grid_points, std::size_t grid_max_jobs) {
  std::vector<CheckResult> out;

  // Bound validity, on the lower-bound scenario and every extreme scenario.
  {
    std::vector<Scenario> scenarios{lower_scenario(inst)};
    for (JobIndex j = 0; j < inst.jobs(); ++j) scenarios.push_back(extreme_scenario(inst, j));
    bool valid = true;
    bool dominated = true;
    std::string detail = "all lower bounds <= optimum on " + std::to_string(scenarios.size()) +
                         " scenarios";
    for (const auto& r : scenarios) {
      const Time opt = optimal_makespan(inst, r, lim).value;
      const BoundsReport b = lb_combined(r, inst);
      const Rational o(opt);
      if (b.lb_avg > o || Rational(b.lb1) > o || b.lb2 > o || Rational(b.lb3) > o) {
        valid = false;
        detail = "bound above optimum " + std::to_string(opt) + ": LB=" + b.lb_avg.to_string() +
                 " LB1=" + std::to_string(b.lb1) + " LB2=" + b.lb2.to_string() +
                 " LB3=" + std::to_string(b.lb3);
      }
      if (b.lb_avg > b.lb2) dominated = false;
    }
    out.push_back(make("bound validity", valid, detail));
    out.push_back(make("LB <= LB2", dominated, dominated ? "holds" : "violated"));
  }

  const std::pair<const char*, Schedule> schedules[] = {
      {"pm", pm(inst)}, {"pr", pr(inst)}, {"pre", pre(inst)}};
  Time z_pm = 0;
  for (const auto& [name, s] : schedules) {
    const std::string tag = std::string("[") + name + "]";
    const RegretReport all = exact_worst_case_regret(s, inst, lim, /*all_extreme=*/true);
    const RegretReport effective = exact_worst_case_regret(s, inst, lim);
    const Time z = all.value.num();
    if (std::string(name) == "pm") z_pm = z;

    if (inst.jobs() <= grid_max_jobs) {
      const RegretReport grid = grid_regret(s, inst, grid_points, lim);
      out.push_back(make("scenario reduction " + tag, grid.value == all.value,
                         "grid=" + grid.value.to_string() + " extreme=" + all.value.to_string()));
    } else {
      out.push_back(skipped("scenario reduction " + tag,
                            "n > " + std::to_string(grid_max_jobs) + ", grid too large"));
    }
    out.push_back(make("scenario pruning " + tag, effective.value == all.value,
                       "effective=" + effective.value.to_string() +
                           " all=" + all.value.to_string()));
    const Time upper = regret_upper_bound(s, inst);
    out.push_back(make("regret sandwich " + tag, 0 <= z && z <= upper,
                       "0 <= " + std::to_string(z) + " <= " + std::to_string(upper)));
    const Rational relaxed = relaxed_regret(s, inst).value;
    out.push_back(make("relaxed >= exact " + tag, relaxed >= all.value,
                       "relaxed=" + relaxed.to_string() + " exact=" + std::to_string(z)));
  }

  if (detect_disjoint(inst)) {
    out.push_back(make("disjoint intervals: Z(x_PM) = 0", z_pm == 0,
                       "Z(x_PM)=" + std::to_string(z_pm)));
  } else {
    out.push_back(skipped("disjoint intervals: Z(x_PM) = 0", "intervals overlap"));
  }
  if (auto j = detect_dominant_job(inst)) {
    out.push_back(make("dominant job: Z(x_PM) = 0", z_pm == 0,
                       "job " + std::to_string(*j + 1) + ", Z(x_PM)=" + std::to_string(z_pm)));
  } else {
    out.push_back(skipped("dominant job: Z(x_PM) = 0", "no dominant job"));
  }
  return out;
}

}  // namespace robust_sched::cli
