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

#include "robust_sched/types.hpp"

namespace robust_sched {

/// Closed release-date interval [lo, hi]. lo == hi encodes a known release date.
struct ReleaseInterval {
  Time lo = 0;
  Time hi = 0;

  friend bool operator==(const ReleaseInterval&, const ReleaseInterval&) = default;
};

/// R|r_j|Cmax instance with interval release dates.
///
/// Processing times are stored per machine row: `processing(i, j)` is the
/// time job j needs on machine i. The constructor checks every invariant
/// (positive processing times, 0 <= lo <= hi, rectangular matrix) and throws
/// InvalidArgument otherwise, so a constructed Instance is always valid.
class Instance {
 public:
  Instance(std::vector<std::vector<Time>> processing, std::vector<ReleaseInterval> release);

  [[nodiscard]] std::size_t jobs() const { return release_.size(); }
  [[nodiscard]] std::size_t machines() const { return processing_.size(); }

  [[nodiscard]] Time processing(MachineIndex i, JobIndex j) const { return processing_[i][j]; }
  [[nodiscard]] const std::vector<std::vector<Time>>& processing_matrix() const {
    return processing_;
  }
  [[nodiscard]] const ReleaseInterval& release(JobIndex j) const { return release_[j]; }
  [[nodiscard]] const std::vector<ReleaseInterval>& releases() const { return release_; }

  /// min_i p[i][j]
  [[nodiscard]] Time min_processing(JobIndex j) const { return min_processing_[j]; }
  /// max_i p[i][j]
  [[nodiscard]] Time max_processing(JobIndex j) const { return max_processing_[j]; }
  /// sum_i p[i][j]; the average over machines is this divided by machines().
  [[nodiscard]] Time total_processing(JobIndex j) const { return total_processing_[j]; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.processing_ == b.processing_ && a.release_ == b.release_;
  }

 private:
  std::vector<std::vector<Time>> processing_;
  std::vector<ReleaseInterval> release_;
  std::vector<Time> min_processing_;
  std::vector<Time> max_processing_;
  std::vector<Time> total_processing_;
};

/// One release-date vector drawn from the interval box of an instance.
class Scenario {
 public:
  Scenario() = default;
  explicit Scenario(std::vector<Time> release) : release_(std::move(release)) {}

  [[nodiscard]] std::size_t size() const { return release_.size(); }
  [[nodiscard]] Time operator[](JobIndex j) const { return release_[j]; }
  [[nodiscard]] std::span<const Time> values() const { return release_; }

  /// True iff the vector has one entry per job and each entry lies in its interval.
  [[nodiscard]] bool feasible_for(const Instance& inst) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  std::vector<Time> release_;
};

/// Throws InvalidArgument unless `r` is feasible for `inst`.
void require_feasible(const Scenario& r, const Instance& inst);

}  // namespace robust_sched
