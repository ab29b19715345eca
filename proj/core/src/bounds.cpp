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

#include "robust_sched/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "robust_sched/scenarios.hpp"

namespace robust_sched {
namespace {

Time ceil_div(Time a, Time b) { return (a + b - 1) / b; }

// All four bounds scaled by m, plus per-anchor values for every position of
// `items` (sorted by release, descending). Anchors with equal release share
// one E set, so values are emitted once per tie group.
struct ScaledBounds {
  Time avg = 0;
  Time lb1 = 0;
  Time lb2 = 0;
  Time lb3 = 0;
  [[nodiscard]] Time combined() const { return std::max({lb1, lb2, lb3}); }
};

template <typename OnGroup>
ScaledBounds scan_sorted(std::span<const detail::BoundItem> items, std::size_t machines,
                         OnGroup&& on_group) {
  const Time m = static_cast<Time>(machines);
  ScaledBounds out;
  Time sum_q = 0;
  Time min_q = 0;
  Time count = 0;
  std::size_t group_begin = 0;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto& it = items[k];
    sum_q += it.min_processing;
    min_q = count == 0 ? it.min_processing : std::min(min_q, it.min_processing);
    ++count;
    out.lb1 = std::max(out.lb1, m * (it.release + it.min_processing));
    const bool group_end = k + 1 == items.size() || items[k + 1].release != it.release;
    if (!group_end) continue;
    const Time w_scaled = m * it.release + sum_q;
    const Time w_tilde = it.release + ceil_div(count, m) * min_q;
    out.lb2 = std::max(out.lb2, w_scaled);
    out.lb3 = std::max(out.lb3, m * w_tilde);
    on_group(group_begin, k + 1, w_scaled, w_tilde);
    group_begin = k + 1;
  }
  if (!items.empty()) out.avg = m * items.back().release + sum_q;
  return out;
}

std::vector<detail::BoundItem> sorted_items(const Scenario& r, const Instance& inst,
                                            std::vector<JobIndex>* order = nullptr) {
  std::vector<JobIndex> idx(inst.jobs());
  std::iota(idx.begin(), idx.end(), JobIndex{0});
  std::stable_sort(idx.begin(), idx.end(), [&](JobIndex a, JobIndex b) { return r[a] > r[b]; });
  std::vector<detail::BoundItem> items;
  items.reserve(idx.size());
  for (JobIndex j : idx) items.push_back({r[j], inst.min_processing(j)});
  if (order) *order = std::move(idx);
  return items;
}

ScaledBounds scaled_bounds(const Scenario& r, const Instance& inst) {
  const auto items = sorted_items(r, inst);
  return scan_sorted(items, inst.machines(), [](auto, auto, auto, auto) {});
}

Rational unscale(Time scaled, const Instance& inst) {
  return Rational(scaled, static_cast<Time>(inst.machines()));
}

}  // namespace

namespace detail {

Time scaled_combined_bound(std::span<const BoundItem> items, std::size_t machines) {
  return scan_sorted(items, machines, [](auto, auto, auto, auto) {}).combined();
}

}  // namespace detail

Rational lb_avg(const Scenario& r, const Instance& inst) {
  return unscale(scaled_bounds(r, inst).avg, inst);
}

Time lb1(const Scenario& r, const Instance& inst) {
  Time best = 0;
  for (JobIndex j = 0; j < inst.jobs(); ++j) best = std::max(best, r[j] + inst.min_processing(j));
  return best;
}

Rational lb2(const Scenario& r, const Instance& inst) {
  return unscale(scaled_bounds(r, inst).lb2, inst);
}

Time lb3(const Scenario& r, const Instance& inst) {
  return scaled_bounds(r, inst).lb3 / static_cast<Time>(inst.machines());
}

BoundsReport lb_combined(const Scenario& r, const Instance& inst) {
  std::vector<JobIndex> order;
  const auto items = sorted_items(r, inst, &order);
  BoundsReport report;
  report.per_job.resize(inst.jobs());
  const auto scaled =
      scan_sorted(items, inst.machines(), [&](std::size_t b, std::size_t e, Time w, Time wt) {
        for (std::size_t k = b; k < e; ++k) report.per_job[order[k]] = {unscale(w, inst), wt};
      });
  const Time m = static_cast<Time>(inst.machines());
  report.lb_avg = unscale(scaled.avg, inst);
  report.lb1 = scaled.lb1 / m;
  report.lb2 = unscale(scaled.lb2, inst);
  report.lb3 = scaled.lb3 / m;
  report.combined = unscale(scaled.combined(), inst);
  return report;
}

std::vector<Rational> extreme_lower_bounds(const Instance& inst) {
  const std::size_t n = inst.jobs();
  std::vector<JobIndex> order;
  const auto base = sorted_items(lower_scenario(inst), inst, &order);
  std::vector<Rational> out(n);
  std::vector<detail::BoundItem> items;
  items.reserve(n);
  for (JobIndex j = 0; j < n; ++j) {
    // Lower-bound scenario with job j moved up to hi_j, still sorted descending.
    const detail::BoundItem raised{inst.release(j).hi, inst.min_processing(j)};
    items.clear();
    bool inserted = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (order[k] == j) continue;
      if (!inserted && base[k].release < raised.release) {
        items.push_back(raised);
        inserted = true;
      }
      items.push_back(base[k]);
    }
    if (!inserted) items.push_back(raised);
    out[j] = unscale(detail::scaled_combined_bound(items, inst.machines()), inst);
  }
  return out;
}

RegretReport relaxed_regret(const Schedule& s, const Instance& inst,
                            RelaxedRegretOptions options) {
  require_valid(s, inst);
  const auto bounds = extreme_lower_bounds(inst);
  std::vector<bool> skip(inst.jobs(), false);
  if (options.prune_covered) {
    for (JobIndex j : covered_jobs(s, inst)) skip[j] = true;
  }
  RegretReport report;
  std::optional<Rational> best;
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (skip[j]) continue;
    Scenario r = extreme_scenario(inst, j);
    const Rational term = Rational(makespan(s, r, inst)) - bounds[j];
    report.per_scenario.push_back({j, term});
    if (!best || term > *best) {
      best = term;
      report.scenario_job = j;
      report.scenario = std::move(r);
    }
  }
  report.value = best.value_or(Rational(0));
  return report;
}

}  // namespace robust_sched
