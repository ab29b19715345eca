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

#include "robust_sched/evaluation.hpp"

#include <algorithm>

namespace robust_sched {

CompletionProfile completion_profile(const Schedule& s, const Scenario& r, const Instance& inst) {
  CompletionProfile out;
  out.completion.resize(s.machines());
  for (std::size_t i = 0; i < s.machines(); ++i) {
    Time c = 0;
    auto& row = out.completion[i];
    row.reserve(s.sequence(i).size());
    for (JobIndex j : s.sequence(i)) {
      c = inst.processing(i, j) + std::max(c, r[j]);
      row.push_back(c);
    }
    out.makespan = std::max(out.makespan, c);
  }
  return out;
}

Time makespan(const Schedule& s, const Scenario& r, const Instance& inst) {
  Time cmax = 0;
  for (std::size_t i = 0; i < s.machines(); ++i) {
    Time c = 0;
    for (JobIndex j : s.sequence(i)) c = inst.processing(i, j) + std::max(c, r[j]);
    cmax = std::max(cmax, c);
  }
  return cmax;
}

Time regret(const Schedule& s, const Scenario& r, const Instance& inst, Time optimal_makespan) {
  return makespan(s, r, inst) - optimal_makespan;
}

}  // namespace robust_sched
