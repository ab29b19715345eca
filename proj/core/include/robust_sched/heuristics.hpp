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
#include <string_view>
#include <vector>

#include "robust_sched/instance.hpp"
#include "robust_sched/schedule.hpp"

namespace robust_sched {

enum class Algorithm { kPartialMakespan, kPartialRegret, kPartialRegretExtended };

/// How PR/PRE obtain LB(extreme_j):
///  - kFull: once, over the whole job set, before construction starts.
///  - kShortSighted: per iteration, over the scheduled jobs plus the candidate.
enum class BoundMode { kFull, kShortSighted };

struct HeuristicConfig {
  Algorithm algorithm = Algorithm::kPartialMakespan;
  BoundMode bound_mode = BoundMode::kFull;  // ignored by PM
};

/// "pm" | "pr" | "pre"; throws InvalidArgument on anything else.
[[nodiscard]] Algorithm parse_algorithm(std::string_view name);
[[nodiscard]] std::string_view to_string(Algorithm a);
/// "full" | "short"
[[nodiscard]] BoundMode parse_bound_mode(std::string_view name);
[[nodiscard]] std::string_view to_string(BoundMode b);

/// U_j = { t in remaining, t != j : lo_t < hi_j }, ascending.
[[nodiscard]] std::vector<JobIndex> availability_set(const Instance& inst, JobIndex j,
                                                     const std::vector<JobIndex>& remaining);

/// PM job selection: minimal |U_j|, then minimal sum of average processing
/// times over U_j, then lowest index. `remaining` must be nonempty.
[[nodiscard]] JobIndex pm_indicator(const Instance& inst, const std::vector<JobIndex>& remaining);

/// Partial_Makespan: pick a job with pm_indicator, append it to the machine
/// where it completes earliest under its own extreme scenario.
[[nodiscard]] Schedule pm(const Instance& inst);

/// Partial_Regret: per iteration choose the (job, machine) minimizing the
/// candidate's completion under its extreme scenario minus LB of that
/// scenario. Ties go to the largest idle gap under the lower-bound scenario.
[[nodiscard]] Schedule pr(const Instance& inst, BoundMode mode = BoundMode::kFull);

/// Partial_Regret_Extended: like PR, but each candidate placement is scored by
/// the worst partial regret over the extreme scenarios of every scheduled job
/// and the candidate. Ties go to the largest average gap.
[[nodiscard]] Schedule pre(const Instance& inst, BoundMode mode = BoundMode::kFull);

/// Dispatch on cfg.algorithm.
[[nodiscard]] Schedule solve(const Instance& inst, const HeuristicConfig& cfg);

/// True iff all release intervals are pairwise disjoint as closed intervals.
[[nodiscard]] bool detect_disjoint(const Instance& inst);

/// A job j with max_{k != j} hi_k + sum_{k != j} max_i p[i][k] <= hi_j, or
/// nullopt. Among several, the one with the largest hi_j (lowest index on ties).
[[nodiscard]] std::optional<JobIndex> detect_dominant_job(const Instance& inst);

}  // namespace robust_sched
