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

#include "robust_sched/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace robust_sched {
namespace {

// Distributions are written out by hand: the standard library's
// uniform_*_distribution differ between implementations, mt19937_64 does not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi], by rejection.
  Time uniform_int(Time lo, Time hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<Time>(x % range);
  }

  // Uniform on [lo, hi) with 53 random bits.
  double uniform_real(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t k = v.size(); k > 1; --k) {
      const auto pick = static_cast<std::size_t>(uniform_int(0, static_cast<Time>(k - 1)));
      std::swap(v[k - 1], v[pick]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

Time segment_lo(std::size_t s, const GenParams& p) {
  return static_cast<Time>(s) * p.release_domain_hi / static_cast<Time>(p.segments);
}

Time segment_hi(std::size_t s, const GenParams& p) {
  if (s + 1 == p.segments) return p.release_domain_hi;
  return segment_lo(s + 1, p) - 1;
}

Time round_half_up(double x) { return static_cast<Time>(std::floor(x + 0.5)); }

}  // namespace

GenParams GenParams::ds1(std::size_t jobs, std::size_t machines, std::uint64_t seed) {
  GenParams p;
  p.jobs = jobs;
  p.machines = machines;
  p.release_domain_hi = 150;
  p.segments = 10;
  p.seed = seed;
  return p;
}

GenParams GenParams::ds2(std::size_t jobs, std::size_t machines, std::uint64_t seed) {
  GenParams p;
  p.jobs = jobs;
  p.machines = machines;
  p.release_domain_hi = 300;
  p.segments = 5;
  p.seed = seed;
  return p;
}

void GenParams::validate() const {
  if (machines < 1) throw InvalidArgument("machines must be >= 1");
  if (segments < 1) throw InvalidArgument("segments must be >= 1");
  if (jobs < segments) {
    throw InvalidArgument("jobs (" + std::to_string(jobs) + ") must be >= segments (" +
                          std::to_string(segments) + ")");
  }
  if (processing_lo < 1) throw InvalidArgument("processing_lo must be >= 1");
  if (processing_hi < processing_lo) throw InvalidArgument("processing_hi must be >= processing_lo");
  if (release_domain_hi < static_cast<Time>(segments)) {
    throw InvalidArgument("release_domain_hi must be >= segments");
  }
  if (!(offset_lo >= 0.0) || !(offset_hi >= offset_lo)) {
    throw InvalidArgument("offsets must satisfy 0 <= offset_lo <= offset_hi");
  }
}

GenParams dataset_params(std::string_view dataset, std::size_t jobs, std::size_t machines,
                         std::uint64_t seed) {
  if (dataset == "ds1" || dataset == "DS1") return GenParams::ds1(jobs, machines, seed);
  if (dataset == "ds2" || dataset == "DS2") return GenParams::ds2(jobs, machines, seed);
  throw InvalidArgument("unknown dataset '" + std::string(dataset) + "' (expected ds1 or ds2)");
}

std::size_t segment_of(Time release_lo, const GenParams& params) {
  for (std::size_t s = 0; s + 1 < params.segments; ++s) {
    if (release_lo <= segment_hi(s, params)) return s;
  }
  return params.segments - 1;
}

Instance generate(const GenParams& params) {
  params.validate();
  Rng rng(params.seed);
  const std::size_t n = params.jobs;
  const std::size_t m = params.machines;

  std::vector<std::vector<Time>> p(m, std::vector<Time>(n));
  for (auto& row : p) {
    for (auto& v : row) v = rng.uniform_int(params.processing_lo, params.processing_hi);
  }

  std::vector<ReleaseInterval> release(n);
  for (JobIndex j = 0; j < n; ++j) {
    // j mod w: floor(n/w) jobs per segment, the remainder round-robin from segment 0.
    const std::size_t s = j % params.segments;
    const Time lo = rng.uniform_int(segment_lo(s, params), segment_hi(s, params));
    Time total = 0;
    for (std::size_t i = 0; i < m; ++i) total += p[i][j];
    const double avg = static_cast<double>(total) / static_cast<double>(m);
    const double offset = params.offset_lo == params.offset_hi
                              ? params.offset_lo
                              : rng.uniform_real(params.offset_lo, params.offset_hi);
    release[j] = {lo, lo + round_half_up(avg * offset)};
  }
  return Instance(std::move(p), std::move(release));
}

Instance derive_family(const Instance& base, const GenParams& layout, std::size_t target_jobs,
                       std::size_t target_machines, std::uint64_t seed) {
  if (target_jobs < 1 || target_jobs > base.jobs()) {
    throw InvalidArgument("target jobs must lie in [1, " + std::to_string(base.jobs()) + "]");
  }
  if (target_machines < 1 || target_machines > base.machines()) {
    throw InvalidArgument("target machines must lie in [1, " + std::to_string(base.machines()) +
                          "]");
  }
  if (layout.segments < 1) throw InvalidArgument("layout needs at least one segment");
  if (target_jobs == base.jobs() && target_machines == base.machines()) return base;

  const std::size_t w = layout.segments;
  std::vector<std::vector<JobIndex>> members(w);
  for (JobIndex j = 0; j < base.jobs(); ++j) {
    members[segment_of(base.release(j).lo, layout)].push_back(j);
  }

  Rng rng(seed);
  std::vector<std::size_t> quota(w, target_jobs / w);
  for (std::size_t s = 0; s < w; ++s) {
    if (members[s].size() < quota[s]) {
      throw InvalidArgument("segment " + std::to_string(s + 1) + " has only " +
                            std::to_string(members[s].size()) + " jobs, need " +
                            std::to_string(quota[s]));
    }
  }
  std::vector<std::size_t> order(w);
  for (std::size_t s = 0; s < w; ++s) order[s] = s;
  rng.shuffle(order);
  std::size_t extra = target_jobs % w;
  for (std::size_t s : order) {
    if (extra == 0) break;
    if (members[s].size() > quota[s]) {
      ++quota[s];
      --extra;
    }
  }
  if (extra != 0) throw InvalidArgument("not enough jobs in the base instance segments");

  std::vector<JobIndex> kept;
  kept.reserve(target_jobs);
  for (std::size_t s = 0; s < w; ++s) {
    auto pool = members[s];
    // Partial Fisher-Yates: the first quota[s] entries are a uniform sample.
    for (std::size_t k = 0; k < quota[s]; ++k) {
      const auto pick = static_cast<std::size_t>(
          rng.uniform_int(static_cast<Time>(k), static_cast<Time>(pool.size() - 1)));
      std::swap(pool[k], pool[pick]);
    }
    kept.insert(kept.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(quota[s]));
  }
  std::sort(kept.begin(), kept.end());

  std::vector<std::vector<Time>> p(target_machines, std::vector<Time>(kept.size()));
  std::vector<ReleaseInterval> release(kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    for (std::size_t i = 0; i < target_machines; ++i) p[i][c] = base.processing(i, kept[c]);
    release[c] = base.release(kept[c]);
  }
  return Instance(std::move(p), std::move(release));
}

}  // namespace robust_sched
