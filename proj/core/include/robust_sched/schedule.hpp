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
#include <string>
#include <vector>

#include "robust_sched/instance.hpp"

namespace robust_sched {

/// Per-machine ordered job sequences. Sequence form makes positions
/// contiguous, so only the assignment constraints need checking.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::vector<std::vector<JobIndex>> machines)
      : machines_(std::move(machines)) {}
  /// m empty sequences.
  static Schedule empty(std::size_t machines) {
    return Schedule(std::vector<std::vector<JobIndex>>(machines));
  }

  [[nodiscard]] std::size_t machines() const { return machines_.size(); }
  [[nodiscard]] const std::vector<JobIndex>& sequence(MachineIndex i) const { return machines_[i]; }
  [[nodiscard]] const std::vector<std::vector<JobIndex>>& sequences() const { return machines_; }
  [[nodiscard]] std::size_t job_count() const;

  void append(MachineIndex i, JobIndex j) { machines_[i].push_back(j); }
  void pop_back(MachineIndex i) { machines_[i].pop_back(); }

  struct Position {
    MachineIndex machine;
    std::size_t index;  // 0-based position in the machine sequence
  };
  /// job -> (machine, position); requires a valid schedule for an n-job instance.
  [[nodiscard]] std::vector<Position> positions(std::size_t jobs) const;

  friend bool operator==(const Schedule&, const Schedule&) = default;
  friend auto operator<=>(const Schedule&, const Schedule&) = default;

 private:
  std::vector<std::vector<JobIndex>> machines_;
};

enum class ViolationKind {
  kMachineCountMismatch,
  kJobOutOfRange,
  kDuplicateJob,
  kMissingJob,
};

/// First violated assignment constraint. Job numbers in `message` are
/// 1-based; `job` is the 0-based index.
struct Violation {
  ViolationKind kind;
  std::size_t job = 0;
  std::string message;
};

/// nullopt iff every job appears exactly once and the machine count matches.
[[nodiscard]] std::optional<Violation> validate_schedule(const Schedule& s, const Instance& inst);

/// Throws InvalidArgument carrying the violation message.
void require_valid(const Schedule& s, const Instance& inst);

}  // namespace robust_sched
