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

#include "robust_sched/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "robust_sched/bounds.hpp"

namespace robust_sched {
namespace {

constexpr Time kInfinity = std::numeric_limits<Time>::max();

// LB values scaled by m. Every combined bound has a denominator dividing m.
std::vector<Time> scaled_extreme_bounds(const Instance& inst) {
  const Time m = static_cast<Time>(inst.machines());
  const auto bounds = extreme_lower_bounds(inst);
  std::vector<Time> out(bounds.size());
  for (std::size_t j = 0; j < bounds.size(); ++j) out[j] = bounds[j].num() * (m / bounds[j].den());
  return out;
}

// Jobs placed so far, kept sorted by release lower bound (descending) so that
// short-sighted bounds on "scheduled + candidate" can be built by merging.
class ScheduledByRelease {
 public:
  explicit ScheduledByRelease(const Instance& inst) : inst_(inst) {}

  void insert(JobIndex j) {
    const Time lo = inst_.release(j).lo;
    auto pos = std::find_if(jobs_.begin(), jobs_.end(),
                            [&](JobIndex t) { return inst_.release(t).lo < lo; });
    jobs_.insert(pos, j);
  }

  // m * LB of the subset (scheduled + extra), all at their lower release
  // except `raised` (a scheduled job, or none) at its upper release. `extra`
  // is appended at `extra_release`.
  Time scaled_bound(JobIndex raised, JobIndex extra, Time extra_release) {
    buffer_.clear();
    const detail::BoundItem extra_item{extra_release, inst_.min_processing(extra)};
    std::optional<detail::BoundItem> raised_item;
    if (raised != kNone) raised_item = detail::BoundItem{inst_.release(raised).hi,
                                                         inst_.min_processing(raised)};
    bool extra_done = false;
    auto flush_pending = [&](Time below) {
      // Emit pending items whose release is strictly above `below`.
      for (;;) {
        const bool can_raised = raised_item && raised_item->release > below;
        const bool can_extra = !extra_done && extra_item.release > below;
        if (!can_raised && !can_extra) return;
        if (can_raised && (!can_extra || raised_item->release >= extra_item.release)) {
          buffer_.push_back(*raised_item);
          raised_item.reset();
        } else {
          buffer_.push_back(extra_item);
          extra_done = true;
        }
      }
    };
    for (JobIndex t : jobs_) {
      if (t == raised) continue;
      const Time lo = inst_.release(t).lo;
      flush_pending(lo - 1);
      buffer_.push_back({lo, inst_.min_processing(t)});
    }
    flush_pending(std::numeric_limits<Time>::min());
    return detail::scaled_combined_bound(buffer_, inst_.machines());
  }

  static constexpr JobIndex kNone = std::numeric_limits<JobIndex>::max();

 private:
  const Instance& inst_;
  std::vector<JobIndex> jobs_;
  std::vector<detail::BoundItem> buffer_;
};

// Shared incremental state of the constructive algorithms.
struct Construction {
  explicit Construction(const Instance& inst)
      : inst(inst),
        schedule(Schedule::empty(inst.machines())),
        lower_completion(inst.machines(), 0),
        remaining(inst.jobs()) {
    for (JobIndex j = 0; j < inst.jobs(); ++j) remaining[j] = j;
  }

  void place(JobIndex v, MachineIndex i) {
    schedule.append(i, v);
    lower_completion[i] =
        inst.processing(i, v) + std::max(lower_completion[i], inst.release(v).lo);
    remaining.erase(std::find(remaining.begin(), remaining.end(), v));
  }

  const Instance& inst;
  Schedule schedule;
  std::vector<Time> lower_completion;  // machine completion under the lower-bound scenario
  std::vector<JobIndex> remaining;     // ascending
};

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  if (name == "pm") return Algorithm::kPartialMakespan;
  if (name == "pr") return Algorithm::kPartialRegret;
  if (name == "pre") return Algorithm::kPartialRegretExtended;
  throw InvalidArgument("unknown algorithm '" + std::string(name) + "' (expected pm, pr or pre)");
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kPartialMakespan: return "pm";
    case Algorithm::kPartialRegret: return "pr";
    case Algorithm::kPartialRegretExtended: return "pre";
  }
  return "?";
}

BoundMode parse_bound_mode(std::string_view name) {
  if (name == "full") return BoundMode::kFull;
  if (name == "short") return BoundMode::kShortSighted;
  throw InvalidArgument("unknown bound mode '" + std::string(name) + "' (expected full or short)");
}

std::string_view to_string(BoundMode b) {
  return b == BoundMode::kFull ? "full" : "short";
}

std::vector<JobIndex> availability_set(const Instance& inst, JobIndex j,
                                       const std::vector<JobIndex>& remaining) {
  std::vector<JobIndex> out;
  const Time hi = inst.release(j).hi;
  for (JobIndex t : remaining) {
    if (t != j && inst.release(t).lo < hi) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

JobIndex pm_indicator(const Instance& inst, const std::vector<JobIndex>& remaining) {
  if (remaining.empty()) throw InvalidArgument("pm_indicator needs a nonempty job set");
  JobIndex best = remaining.front();
  std::size_t best_count = std::numeric_limits<std::size_t>::max();
  Time best_load = kInfinity;
  for (JobIndex j : remaining) {
    const auto u = availability_set(inst, j, remaining);
    // Sum of totals instead of averages: same order, no division.
    Time load = 0;
    for (JobIndex t : u) load += inst.total_processing(t);
    if (u.size() < best_count || (u.size() == best_count && load < best_load) ||
        (u.size() == best_count && load == best_load && j < best)) {
      best = j;
      best_count = u.size();
      best_load = load;
    }
  }
  return best;
}

Schedule pm(const Instance& inst) {
  const std::size_t n = inst.jobs();
  Construction state(inst);

  // |U_j| and its workload, maintained as jobs leave the remaining set.
  std::vector<std::size_t> count(n, 0);
  std::vector<Time> load(n, 0);
  for (JobIndex j = 0; j < n; ++j) {
    for (JobIndex t = 0; t < n; ++t) {
      if (t != j && inst.release(t).lo < inst.release(j).hi) {
        ++count[j];
        load[j] += inst.total_processing(t);
      }
    }
  }

  while (!state.remaining.empty()) {
    JobIndex v = state.remaining.front();
    for (JobIndex j : state.remaining) {
      if (count[j] < count[v] || (count[j] == count[v] && load[j] < load[v])) v = j;
    }

    const Time hi = inst.release(v).hi;
    MachineIndex target = 0;
    Time best = kInfinity;
    for (MachineIndex i = 0; i < inst.machines(); ++i) {
      const Time c = inst.processing(i, v) + std::max(state.lower_completion[i], hi);
      if (c < best) {
        best = c;
        target = i;
      }
    }
    state.place(v, target);

    const Time lo_v = inst.release(v).lo;
    for (JobIndex j : state.remaining) {
      if (lo_v < inst.release(j).hi) {
        --count[j];
        load[j] -= inst.total_processing(v);
      }
    }
  }
  return std::move(state.schedule);
}

Schedule pr(const Instance& inst, BoundMode mode) {
  const Time m = static_cast<Time>(inst.machines());
  Construction state(inst);
  std::vector<Time> bounds;
  if (mode == BoundMode::kFull) bounds = scaled_extreme_bounds(inst);
  ScheduledByRelease scheduled(inst);

  while (!state.remaining.empty()) {
    JobIndex best_v = 0;
    MachineIndex best_i = 0;
    Time best_obj = kInfinity;
    Time best_gap = -1;
    for (JobIndex v : state.remaining) {
      const Time hi = inst.release(v).hi;
      const Time lb = mode == BoundMode::kFull
                          ? bounds[v]
                          : scheduled.scaled_bound(ScheduledByRelease::kNone, v, hi);
      for (MachineIndex i = 0; i < inst.machines(); ++i) {
        const Time before = state.lower_completion[i];
        const Time obj = m * (inst.processing(i, v) + std::max(before, hi)) - lb;
        if (obj > best_obj) continue;
        // Equal partial regrets: prefer the placement leaving the least idle
        // time, i.e. the largest gap between the machine and hi_v.
        const Time gap = std::max<Time>(before - hi, 0);
        if (obj < best_obj || gap > best_gap) {
          best_obj = obj;
          best_gap = gap;
          best_v = v;
          best_i = i;
        }
      }
    }
    state.place(best_v, best_i);
    if (mode == BoundMode::kShortSighted) scheduled.insert(best_v);
  }
  return std::move(state.schedule);
}

Schedule pre(const Instance& inst, BoundMode mode) {
  const std::size_t n = inst.jobs();
  const std::size_t machines = inst.machines();
  const Time m = static_cast<Time>(machines);
  Construction state(inst);
  std::vector<Time> bounds;
  if (mode == BoundMode::kFull) bounds = scaled_extreme_bounds(inst);
  ScheduledByRelease scheduled_sorted(inst);

  // completion[i][t]: completion of machine i under the extreme scenario of t.
  std::vector<std::vector<Time>> completion(machines, std::vector<Time>(n, 0));
  std::vector<JobIndex> scheduled;
  scheduled.reserve(n);
  // Short-sighted bounds for the current candidate, indexed by job.
  std::vector<Time> local_bounds(n, 0);

  auto gap_sum = [&](MachineIndex i, Time hi) {
    Time sum = 0;
    for (JobIndex t : scheduled) sum += std::max<Time>(completion[i][t] - hi, 0);
    return sum;
  };

  while (!state.remaining.empty()) {
    JobIndex best_v = 0;
    MachineIndex best_i = 0;
    Time best_obj = kInfinity;
    Time best_gap = -1;
    for (JobIndex v : state.remaining) {
      const Time lo = inst.release(v).lo;
      const Time hi = inst.release(v).hi;
      const Time* lb = bounds.data();
      if (mode == BoundMode::kShortSighted) {
        local_bounds[v] = scheduled_sorted.scaled_bound(ScheduledByRelease::kNone, v, hi);
        for (JobIndex t : scheduled) local_bounds[t] = scheduled_sorted.scaled_bound(t, v, lo);
        lb = local_bounds.data();
      }
      for (MachineIndex i = 0; i < machines; ++i) {
        const auto& row = completion[i];
        // Worst partial regret over the scheduled jobs' scenarios and v's own.
        Time worst = m * std::max(row[v], hi) - lb[v];
        for (JobIndex t : scheduled) worst = std::max(worst, m * std::max(row[t], lo) - lb[t]);
        const Time obj = m * inst.processing(i, v) + worst;
        if (obj > best_obj) continue;
        if (obj < best_obj) {
          best_obj = obj;
          best_gap = gap_sum(i, hi);
          best_v = v;
          best_i = i;
          continue;
        }
        // Tie: largest average gap wins; the divisor |scheduled| is common to
        // all candidates, so the plain sum is compared. With nothing scheduled
        // every sum is 0 and the index order decides.
        const Time gap = gap_sum(i, hi);
        if (gap > best_gap) {
          best_gap = gap;
          best_v = v;
          best_i = i;
        }
      }
    }

    auto& row = completion[best_i];
    const Time p = inst.processing(best_i, best_v);
    const Time lo = inst.release(best_v).lo;
    for (JobIndex t = 0; t < n; ++t) row[t] = p + std::max(row[t], t == best_v ? inst.release(t).hi : lo);
    state.place(best_v, best_i);
    scheduled.push_back(best_v);
    if (mode == BoundMode::kShortSighted) scheduled_sorted.insert(best_v);
  }
  return std::move(state.schedule);
}

Schedule solve(const Instance& inst, const HeuristicConfig& cfg) {
  switch (cfg.algorithm) {
    case Algorithm::kPartialMakespan: return pm(inst);
    case Algorithm::kPartialRegret: return pr(inst, cfg.bound_mode);
    case Algorithm::kPartialRegretExtended: return pre(inst, cfg.bound_mode);
  }
  throw InvalidArgument("unknown algorithm");
}

bool detect_disjoint(const Instance& inst) {
  std::vector<ReleaseInterval> iv = inst.releases();
  std::sort(iv.begin(), iv.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  for (std::size_t k = 1; k < iv.size(); ++k) {
    if (iv[k].lo <= iv[k - 1].hi) return false;
  }
  return true;
}

std::optional<JobIndex> detect_dominant_job(const Instance& inst) {
  const std::size_t n = inst.jobs();
  Time total = 0;
  for (JobIndex k = 0; k < n; ++k) total += inst.max_processing(k);
  // Largest and second-largest hi, for max over k != j in O(1).
  JobIndex top = 0;
  for (JobIndex k = 1; k < n; ++k) {
    if (inst.release(k).hi > inst.release(top).hi) top = k;
  }
  Time second = 0;
  bool has_second = false;
  for (JobIndex k = 0; k < n; ++k) {
    if (k == top) continue;
    second = has_second ? std::max(second, inst.release(k).hi) : inst.release(k).hi;
    has_second = true;
  }

  std::optional<JobIndex> found;
  for (JobIndex j = 0; j < n; ++j) {
    const Time others_hi = j == top ? (has_second ? second : 0) : inst.release(top).hi;
    const Time lhs = others_hi + (total - inst.max_processing(j));
    if (lhs <= inst.release(j).hi &&
        (!found || inst.release(j).hi > inst.release(*found).hi)) {
      found = j;
    }
  }
  return found;
}

}  // namespace robust_sched
