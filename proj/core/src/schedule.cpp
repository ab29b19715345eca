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

#include "robust_sched/schedule.hpp"

namespace robust_sched {

std::size_t Schedule::job_count() const {
  std::size_t count = 0;
  for (const auto& seq : machines_) count += seq.size();
  return count;
}

std::vector<Schedule::Position> Schedule::positions(std::size_t jobs) const {
  std::vector<Position> out(jobs, Position{0, 0});
  for (std::size_t i = 0; i < machines_.size(); ++i) {
    for (std::size_t k = 0; k < machines_[i].size(); ++k) out[machines_[i][k]] = {i, k};
  }
  return out;
}

std::optional<Violation> validate_schedule(const Schedule& s, const Instance& inst) {
  if (s.machines() != inst.machines()) {
    return Violation{ViolationKind::kMachineCountMismatch, 0,
                     "schedule has " + std::to_string(s.machines()) + " machines, instance has " +
                         std::to_string(inst.machines())};
  }
  std::vector<bool> seen(inst.jobs(), false);
  for (const auto& seq : s.sequences()) {
    for (JobIndex j : seq) {
      if (j >= inst.jobs()) {
        return Violation{ViolationKind::kJobOutOfRange, j,
                         "job " + std::to_string(j + 1) + " out of range"};
      }
      if (seen[j]) {
        return Violation{ViolationKind::kDuplicateJob, j,
                         "duplicate job " + std::to_string(j + 1)};
      }
      seen[j] = true;
    }
  }
  for (std::size_t j = 0; j < seen.size(); ++j) {
    if (!seen[j]) {
      return Violation{ViolationKind::kMissingJob, j,
                       "job " + std::to_string(j + 1) + " unassigned"};
    }
  }
  return std::nullopt;
}

void require_valid(const Schedule& s, const Instance& inst) {
  if (auto v = validate_schedule(s, inst)) throw InvalidArgument("invalid schedule: " + v->message);
}

}  // namespace robust_sched
