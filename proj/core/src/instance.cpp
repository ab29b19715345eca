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

#include "robust_sched/instance.hpp"

#include <algorithm>
#include <string>

namespace robust_sched {

Instance::Instance(std::vector<std::vector<Time>> processing, std::vector<ReleaseInterval> release)
    : processing_(std::move(processing)), release_(std::move(release)) {
  const std::size_t n = release_.size();
  if (n == 0) throw InvalidArgument("instance needs at least one job");
  if (processing_.empty()) throw InvalidArgument("instance needs at least one machine");
  for (std::size_t i = 0; i < processing_.size(); ++i) {
    if (processing_[i].size() != n) {
      throw InvalidArgument("processing row " + std::to_string(i + 1) + " has " +
                            std::to_string(processing_[i].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (processing_[i][j] <= 0) {
        throw InvalidArgument("processing time of job " + std::to_string(j + 1) +
                              " on machine " + std::to_string(i + 1) + " must be positive");
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (release_[j].lo < 0 || release_[j].lo > release_[j].hi) {
      throw InvalidArgument("release interval of job " + std::to_string(j + 1) +
                            " must satisfy 0 <= lo <= hi");
    }
  }

  min_processing_.resize(n);
  max_processing_.resize(n);
  total_processing_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Time lo = processing_[0][j];
    Time hi = lo;
    Time sum = 0;
    for (const auto& row : processing_) {
      lo = std::min(lo, row[j]);
      hi = std::max(hi, row[j]);
      sum += row[j];
    }
    min_processing_[j] = lo;
    max_processing_[j] = hi;
    total_processing_[j] = sum;
  }
}

bool Scenario::feasible_for(const Instance& inst) const {
  if (release_.size() != inst.jobs()) return false;
  for (std::size_t j = 0; j < release_.size(); ++j) {
    const auto& iv = inst.release(j);
    if (release_[j] < iv.lo || release_[j] > iv.hi) return false;
  }
  return true;
}

void require_feasible(const Scenario& r, const Instance& inst) {
  if (r.size() != inst.jobs()) {
    throw InvalidArgument("scenario has " + std::to_string(r.size()) + " release dates, expected " +
                          std::to_string(inst.jobs()));
  }
  for (std::size_t j = 0; j < r.size(); ++j) {
    const auto& iv = inst.release(j);
    if (r[j] < iv.lo || r[j] > iv.hi) {
      throw InvalidArgument("release date of job " + std::to_string(j + 1) +
                            " lies outside its interval");
    }
  }
}

}  // namespace robust_sched
