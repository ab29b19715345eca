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

#include "robust_sched/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "robust_sched/bounds.hpp"
#include "robust_sched/scenarios.hpp"

namespace robust_sched {
namespace {

using Clock = std::chrono::steady_clock;

void check_limits(const Instance& inst, const OracleLimits& lim) {
  if (inst.jobs() > lim.max_jobs) {
    throw LimitExceeded("oracle limit exceeded: n = " + std::to_string(inst.jobs()) +
                        " > max jobs " + std::to_string(lim.max_jobs));
  }
  if (inst.machines() > lim.max_machines) {
    throw LimitExceeded("oracle limit exceeded: m = " + std::to_string(inst.machines()) +
                        " > max machines " + std::to_string(lim.max_machines));
  }
}

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds))) {}

  // Polls the clock every 1024 calls.
  bool expired() {
    if (expired_) return true;
    if ((++ticks_ & 1023u) != 0) return false;
    expired_ = Clock::now() >= end_;
    return expired_;
  }

 private:
  Clock::time_point end_;
  std::uint32_t ticks_ = 0;
  bool expired_ = false;
};

// Depth-first assignment of jobs (in release order) to machines.
class MakespanSearch {
 public:
  MakespanSearch(const Instance& inst, const Scenario& r, const OracleLimits& lim,
                 OracleOptions opts)
      : inst_(inst), r_(r), prune_(opts.prune), deadline_(lim.time_budget_seconds) {
    const std::size_t n = inst.jobs();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), JobIndex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](JobIndex a, JobIndex b) { return r[a] < r[b]; });
    // Items of order_[d..n) sorted by release descending are the first n-d
    // entries of the reversed order.
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      remaining_items_.push_back({r[*it], inst.min_processing(*it)});
    }
    available_.assign(inst.machines(), 0);
    assignment_.assign(n, 0);
  }

  OptimalMakespan run() {
    descend(0, 0);
    OptimalMakespan out;
    out.value = best_;
    out.certified = !timed_out_;
    out.schedule = Schedule::empty(inst_.machines());
    for (std::size_t d = 0; d < order_.size(); ++d) out.schedule.append(best_assignment_[d], order_[d]);
    return out;
  }

 private:
  void descend(std::size_t depth, Time partial) {
    if (timed_out_) return;
    if (deadline_.expired() && best_ < kUnset) {
      timed_out_ = true;
      return;
    }
    const std::size_t n = order_.size();
    if (depth == n) {
      if (partial < best_) {
        best_ = partial;
        best_assignment_ = assignment_;
      }
      return;
    }
    if (prune_ && best_ < kUnset && bound(depth, partial) >= best_) return;

    const JobIndex j = order_[depth];
    for (MachineIndex i = 0; i < inst_.machines(); ++i) {
      const Time saved = available_[i];
      available_[i] = inst_.processing(i, j) + std::max(saved, r_[j]);
      assignment_[depth] = i;
      descend(depth + 1, std::max(partial, available_[i]));
      available_[i] = saved;
    }
  }

  // Lower bound on any completion of this branch.
  Time bound(std::size_t depth, Time partial) const {
    Time lb = partial;
    // Each remaining job still has to run after its machine frees up.
    for (std::size_t d = depth; d < order_.size(); ++d) {
      const JobIndex t = order_[d];
      Time best_here = std::numeric_limits<Time>::max();
      for (MachineIndex i = 0; i < inst_.machines(); ++i) {
        best_here = std::min(best_here, inst_.processing(i, t) + std::max(available_[i], r_[t]));
      }
      lb = std::max(lb, best_here);
    }
    // Combined bound of the remaining jobs on their own.
    const Time m = static_cast<Time>(inst_.machines());
    const Time scaled = detail::scaled_combined_bound(
        std::span(remaining_items_).first(order_.size() - depth), inst_.machines());
    return std::max(lb, (scaled + m - 1) / m);
  }

  static constexpr Time kUnset = std::numeric_limits<Time>::max();

  const Instance& inst_;
  const Scenario& r_;
  bool prune_;
  Deadline deadline_;
  std::vector<JobIndex> order_;
  std::vector<detail::BoundItem> remaining_items_;
  std::vector<Time> available_;
  std::vector<MachineIndex> assignment_;
  std::vector<MachineIndex> best_assignment_;
  Time best_ = kUnset;
  bool timed_out_ = false;
};

// Enumerates sequence-form schedules machine by machine: at every node either
// append an unused job to the current machine or close it and move on. Each
// schedule corresponds to exactly one path.
class RegretSearch {
 public:
  RegretSearch(const Instance& inst, std::vector<Scenario> scenarios, std::vector<Time> optimum,
               const OracleLimits& lim, OracleOptions opts)
      : inst_(inst),
        scenarios_(std::move(scenarios)),
        optimum_(std::move(optimum)),
        prune_(opts.prune),
        deadline_(lim.time_budget_seconds),
        current_(Schedule::empty(inst.machines())),
        used_(inst.jobs(), false),
        closed_(scenarios_.size(), 0),
        open_(scenarios_.size(), 0) {}

  MinRegretResult run() {
    descend(0, 0);
    return {best_schedule_, best_, !timed_out_};
  }

 private:
  Time partial_regret() const {
    Time z = std::numeric_limits<Time>::min();
    for (std::size_t s = 0; s < scenarios_.size(); ++s) {
      z = std::max(z, std::max(closed_[s], open_[s]) - optimum_[s]);
    }
    return z;
  }

  void descend(MachineIndex machine, std::size_t placed) {
    if (timed_out_) return;
    if (deadline_.expired() && has_best_) {
      timed_out_ = true;
      return;
    }
    const Time z = partial_regret();
    if (placed == inst_.jobs()) {
      if (!has_best_ || z < best_) {
        best_ = z;
        best_schedule_ = current_;
        has_best_ = true;
      }
      return;
    }
    // Adding jobs never lowers a makespan, so z bounds every completion.
    if (prune_ && has_best_ && z >= best_) return;

    std::vector<Time> saved(open_);
    for (JobIndex t = 0; t < inst_.jobs(); ++t) {
      if (used_[t]) continue;
      for (std::size_t s = 0; s < scenarios_.size(); ++s) {
        open_[s] = inst_.processing(machine, t) + std::max(saved[s], scenarios_[s][t]);
      }
      used_[t] = true;
      current_.append(machine, t);
      descend(machine, placed + 1);
      current_.pop_back(machine);
      used_[t] = false;
    }
    open_ = saved;

    if (machine + 1 < inst_.machines()) {
      std::vector<Time> saved_closed(closed_);
      for (std::size_t s = 0; s < scenarios_.size(); ++s) {
        closed_[s] = std::max(closed_[s], open_[s]);
        open_[s] = 0;
      }
      descend(machine + 1, placed);
      closed_ = std::move(saved_closed);
      open_ = saved;
    }
  }

  const Instance& inst_;
  std::vector<Scenario> scenarios_;
  std::vector<Time> optimum_;
  bool prune_;
  Deadline deadline_;
  Schedule current_;
  std::vector<bool> used_;
  std::vector<Time> closed_;  // max completion over closed machines, per scenario
  std::vector<Time> open_;    // completion of the current machine, per scenario
  Schedule best_schedule_;
  Time best_ = 0;
  bool has_best_ = false;
  bool timed_out_ = false;
};

}  // namespace

OptimalMakespan optimal_makespan(const Instance& inst, const Scenario& r, const OracleLimits& lim,
                                 OracleOptions opts) {
  check_limits(inst, lim);
  require_feasible(r, inst);
  return MakespanSearch(inst, r, lim, opts).run();
}

RegretReport exact_worst_case_regret(const Schedule& s, const Instance& inst,
                                     const OracleLimits& lim, bool all_extreme) {
  check_limits(inst, lim);
  require_valid(s, inst);
  std::vector<std::pair<JobIndex, Scenario>> scenarios;
  if (all_extreme) {
    for (JobIndex j = 0; j < inst.jobs(); ++j) scenarios.emplace_back(j, extreme_scenario(inst, j));
  } else {
    scenarios = effective_scenarios(s, inst);
  }

  RegretReport report;
  std::optional<Time> best;
  for (auto& [j, r] : scenarios) {
    const auto opt = optimal_makespan(inst, r, lim);
    report.certified = report.certified && opt.certified;
    const Time term = makespan(s, r, inst) - opt.value;
    report.per_scenario.push_back({j, Rational(term)});
    if (!best || term > *best) {
      best = term;
      report.scenario_job = j;
      report.scenario = r;
    }
  }
  report.value = Rational(best.value_or(0));
  return report;
}

std::vector<Time> grid_values(const ReleaseInterval& interval, std::size_t grid_points) {
  if (grid_points < 2) throw InvalidArgument("grid needs at least 2 points per interval");
  const Time width = interval.hi - interval.lo;
  const Time steps = static_cast<Time>(grid_points - 1);
  std::vector<Time> out;
  out.reserve(grid_points);
  for (Time k = 0; k <= steps; ++k) {
    // lo + round_half_up(width * k / steps)
    const Time v = interval.lo + (2 * width * k + steps) / (2 * steps);
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

RegretReport grid_regret(const Schedule& s, const Instance& inst, std::size_t grid_points,
                         const OracleLimits& lim) {
  check_limits(inst, lim);
  require_valid(s, inst);
  const std::size_t n = inst.jobs();
  std::vector<std::vector<Time>> axes(n);
  std::size_t total = 1;
  for (JobIndex j = 0; j < n; ++j) {
    axes[j] = grid_values(inst.release(j), grid_points);
    total *= axes[j].size();
    if (total > kMaxGridScenarios) {
      throw LimitExceeded("grid limit exceeded: more than " + std::to_string(kMaxGridScenarios) +
                          " scenarios");
    }
  }

  RegretReport report;
  std::optional<Time> best;
  std::vector<std::size_t> digit(n, 0);
  std::vector<Time> values(n);
  for (;;) {
    for (JobIndex j = 0; j < n; ++j) values[j] = axes[j][digit[j]];
    Scenario r(values);
    const auto opt = optimal_makespan(inst, r, lim);
    report.certified = report.certified && opt.certified;
    const Time q = makespan(s, r, inst) - opt.value;
    if (!best || q > *best) {
      best = q;
      report.scenario = std::move(r);
    }
    std::size_t j = 0;
    while (j < n && ++digit[j] == axes[j].size()) digit[j++] = 0;
    if (j == n) break;
  }
  report.value = Rational(best.value_or(0));
  return report;
}

MinRegretResult exhaustive_min_regret(const Instance& inst, const OracleLimits& lim,
                                      OracleOptions opts) {
  check_limits(inst, lim);
  std::vector<Scenario> scenarios;
  std::vector<Time> optimum;
  bool certified = true;
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    scenarios.push_back(extreme_scenario(inst, j));
    const auto opt = optimal_makespan(inst, scenarios.back(), lim);
    optimum.push_back(opt.value);
    certified = certified && opt.certified;
  }
  auto result = RegretSearch(inst, std::move(scenarios), std::move(optimum), lim, opts).run();
  result.certified = result.certified && certified;
  return result;
}

}  // namespace robust_sched
