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

#include "robust_sched/scenarios.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "robust_sched/evaluation.hpp"

namespace robust_sched {

Scenario lower_scenario(const Instance& inst) {
  std::vector<Time> r(inst.jobs());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = inst.release(j).lo;
  return Scenario(std::move(r));
}

Scenario extreme_scenario(const Instance& inst, JobIndex j) {
  if (j >= inst.jobs()) {
    throw InvalidArgument("extreme scenario for job " + std::to_string(j + 1) +
                          " out of range (n = " + std::to_string(inst.jobs()) + ")");
  }
  std::vector<Time> r(inst.jobs());
  for (std::size_t t = 0; t < r.size(); ++t) r[t] = inst.release(t).lo;
  r[j] = inst.release(j).hi;
  return Scenario(std::move(r));
}

std::vector<JobIndex> covered_jobs(const Schedule& s, const Instance& inst) {
  const Scenario lower = lower_scenario(inst);
  const CompletionProfile profile = completion_profile(s, lower, inst);
  std::vector<JobIndex> out;
  for (std::size_t i = 0; i < s.machines(); ++i) {
    const auto& seq = s.sequence(i);
    for (std::size_t k = 1; k < seq.size(); ++k) {
      if (profile.completion[i][k - 1] >= inst.release(seq[k]).hi) out.push_back(seq[k]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<JobIndex, Scenario>> effective_scenarios(const Schedule& s,
                                                               const Instance& inst) {
  const auto covered = covered_jobs(s, inst);
  std::vector<std::pair<JobIndex, Scenario>> out;
  out.reserve(inst.jobs() - covered.size());
  auto it = covered.begin();
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    if (it != covered.end() && *it == j) {
      ++it;
      continue;
    }
    out.emplace_back(j, extreme_scenario(inst, j));
  }
  return out;
}

Time regret_upper_bound(const Schedule& s, const Instance& inst) {
  std::optional<Time> best;
  for (const auto& [j, r] : effective_scenarios(s, inst)) {
    const Time term = makespan(s, r, inst) - (inst.release(j).hi + inst.min_processing(j));
    best = best ? std::max(*best, term) : term;
  }
  return best.value_or(0);
}

}  // namespace robust_sched
