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

#include <cstdint>
#include <string>
#include <string_view>

#include "robust_sched/instance.hpp"

namespace robust_sched {

/// Random instance recipe. The release-date domain [0, release_domain_hi] is
/// cut into `segments` equal consecutive segments; every segment receives at
/// least floor(n / segments) interval lower bounds, so intervals stay dense
/// inside each segment.
struct GenParams {
  std::size_t jobs = 50;
  std::size_t machines = 5;
  Time processing_lo = 5;
  Time processing_hi = 50;
  Time release_domain_hi = 150;
  std::size_t segments = 10;
  double offset_lo = 0.2;
  double offset_hi = 5.0;
  std::uint64_t seed = 1;

  /// Dense family: domain 150, 10 segments.
  static GenParams ds1(std::size_t jobs, std::size_t machines, std::uint64_t seed);
  /// Sparse family: domain 300, 5 segments.
  static GenParams ds2(std::size_t jobs, std::size_t machines, std::uint64_t seed);

  /// Throws InvalidArgument naming the first bad field.
  void validate() const;
};

/// "ds1" | "ds2" -> preset; throws InvalidArgument otherwise.
[[nodiscard]] GenParams dataset_params(std::string_view dataset, std::size_t jobs,
                                       std::size_t machines, std::uint64_t seed);

/// Identifies the RNG and sampling scheme; bump when generated bits change.
inline constexpr std::string_view kGeneratorVersion = "robust_sched-gen/1 mt19937_64";

/// Pure function of params (including the seed).
///
///  - p[i][j] uniform on [processing_lo, processing_hi]
///  - job j belongs to segment j mod w; lo_j uniform inside that segment
///  - hi_j = lo_j + round_half_up(avg_j * offset_j), offset_j uniform on
///    [offset_lo, offset_hi), avg_j the mean of p[.][j]; hi may exceed the domain
[[nodiscard]] Instance generate(const GenParams& params);

/// Segment of a release lower bound under the layout of `params`.
[[nodiscard]] std::size_t segment_of(Time release_lo, const GenParams& params);

/// Sub-instance sharing data with `base`: keeps floor(target_jobs / w) jobs per
/// segment (the remainder goes to seed-chosen segments, one extra each),
/// chosen uniformly at random within a segment, in original job order, and the
/// first `target_machines` machine rows. `layout` supplies the segment
/// geometry `base` was generated with. Throws InvalidArgument on infeasible
/// targets.
[[nodiscard]] Instance derive_family(const Instance& base, const GenParams& layout,
                                     std::size_t target_jobs, std::size_t target_machines,
                                     std::uint64_t seed);

}  // namespace robust_sched
