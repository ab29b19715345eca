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

// Reference implementations that share no code with the library beyond the
// data types: plain enumeration of every assignment and every order, and the
// lower bounds evaluated anchor by anchor straight from their definitions.

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "robust_sched/instance.hpp"
#include "robust_sched/rational.hpp"
#include "robust_sched/schedule.hpp"

namespace testing_support {

using robust_sched::Instance;
using robust_sched::JobIndex;
using robust_sched::Rational;
using robust_sched::Scenario;
using robust_sched::Schedule;
using robust_sched::Time;

inline Time sequence_completion(const Instance& inst, const Scenario& r, std::size_t machine,
                                const std::vector<JobIndex>& seq) {
  Time c = 0;
  for (JobIndex j : seq) c = std::max(c, r[j]) + inst.processing(machine, j);
  return c;
}

inline Time brute_makespan(const Instance& inst, const Scenario& r, const Schedule& s) {
  Time best = 0;
  for (std::size_t i = 0; i < s.machines(); ++i) {
    best = std::max(best, sequence_completion(inst, r, i, s.sequence(i)));
  }
  return best;
}

// Best completion of every job subset on every machine, over all orders.
inline std::vector<std::vector<Time>> best_subset_completion(const Instance& inst,
                                                             const Scenario& r) {
  const std::size_t n = inst.jobs();
  std::vector<std::vector<Time>> best(inst.machines(), std::vector<Time>(std::size_t{1} << n));
  for (std::size_t i = 0; i < inst.machines(); ++i) {
    for (std::size_t mask = 0; mask < best[i].size(); ++mask) {
      std::vector<JobIndex> seq;
      for (JobIndex j = 0; j < n; ++j) {
        if (mask >> j & 1) seq.push_back(j);
      }
      Time v = std::numeric_limits<Time>::max();
      do {
        v = std::min(v, sequence_completion(inst, r, i, seq));
      } while (std::next_permutation(seq.begin(), seq.end()));
      best[i][mask] = seq.empty() ? 0 : v;
    }
  }
  return best;
}

inline Time brute_optimal_makespan(const Instance& inst, const Scenario& r) {
  const std::size_t n = inst.jobs();
  const std::size_t m = inst.machines();
  const auto best = best_subset_completion(inst, r);
  std::vector<std::size_t> owner(n, 0);
  Time opt = std::numeric_limits<Time>::max();
  for (;;) {
    std::vector<std::size_t> masks(m, 0);
    for (JobIndex j = 0; j < n; ++j) masks[owner[j]] |= std::size_t{1} << j;
    Time v = 0;
    for (std::size_t i = 0; i < m; ++i) v = std::max(v, best[i][masks[i]]);
    opt = std::min(opt, v);
    std::size_t k = 0;
    while (k < n && ++owner[k] == m) owner[k++] = 0;
    if (k == n) break;
  }
  return opt;
}

inline Scenario brute_extreme(const Instance& inst, JobIndex j) {
  std::vector<Time> r(inst.jobs());
  for (JobIndex t = 0; t < inst.jobs(); ++t) r[t] = t == j ? inst.release(t).hi : inst.release(t).lo;
  return Scenario(std::move(r));
}

// Worst-case regret over the n extreme scenarios, every optimum by enumeration.
inline Time brute_extreme_regret(const Instance& inst, const Schedule& s) {
  Time z = 0;
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    const Scenario r = brute_extreme(inst, j);
    z = std::max(z, brute_makespan(inst, r, s) - brute_optimal_makespan(inst, r));
  }
  return z;
}

// Every schedule in sequence form: each assignment with every order per machine.
template <class Visit>
void for_each_schedule(const Instance& inst, Visit&& visit) {
  const std::size_t n = inst.jobs();
  const std::size_t m = inst.machines();
  std::vector<JobIndex> perm(n);
  std::iota(perm.begin(), perm.end(), JobIndex{0});
  // A permutation plus m - 1 cut points enumerates sequence-form schedules;
  // duplicates are harmless for a minimum.
  do {
    std::vector<std::size_t> cuts(m - 1, 0);
    for (;;) {
      if (std::is_sorted(cuts.begin(), cuts.end())) {
        std::vector<std::vector<JobIndex>> seqs(m);
        std::size_t begin = 0;
        for (std::size_t i = 0; i < m; ++i) {
          const std::size_t end = i + 1 < m ? cuts[i] : n;
          seqs[i].assign(perm.begin() + static_cast<std::ptrdiff_t>(begin),
                         perm.begin() + static_cast<std::ptrdiff_t>(end));
          begin = end;
        }
        visit(Schedule(std::move(seqs)));
      }
      std::size_t k = 0;
      while (k < cuts.size() && ++cuts[k] > n) cuts[k++] = 0;
      if (k == cuts.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline Time brute_min_regret(const Instance& inst) {
  std::vector<Scenario> scenarios;
  std::vector<Time> optima;
  for (JobIndex j = 0; j < inst.jobs(); ++j) {
    scenarios.push_back(brute_extreme(inst, j));
    optima.push_back(brute_optimal_makespan(inst, scenarios.back()));
  }
  Time best = std::numeric_limits<Time>::max();
  for_each_schedule(inst, [&](const Schedule& s) {
    Time z = 0;
    for (std::size_t k = 0; k < scenarios.size(); ++k) {
      z = std::max(z, brute_makespan(inst, scenarios[k], s) - optima[k]);
    }
    best = std::min(best, z);
  });
  return best;
}

inline Time min_p(const Instance& inst, JobIndex t) {
  Time q = inst.processing(0, t);
  for (std::size_t i = 1; i < inst.machines(); ++i) q = std::min(q, inst.processing(i, t));
  return q;
}

inline Rational brute_lb_avg(const Instance& inst, const Scenario& r) {
  Time rmin = r[0];
  Time sum = 0;
  for (JobIndex t = 0; t < inst.jobs(); ++t) {
    rmin = std::min(rmin, r[t]);
    sum += min_p(inst, t);
  }
  const auto m = static_cast<Time>(inst.machines());
  return Rational(rmin * m + sum, m);
}

inline Time brute_lb1(const Instance& inst, const Scenario& r) {
  Time v = 0;
  for (JobIndex t = 0; t < inst.jobs(); ++t) v = std::max(v, r[t] + min_p(inst, t));
  return v;
}

inline Rational brute_lb2(const Instance& inst, const Scenario& r) {
  const auto m = static_cast<Time>(inst.machines());
  Rational best(0);
  for (JobIndex a = 0; a < inst.jobs(); ++a) {
    Time sum = 0;
    for (JobIndex t = 0; t < inst.jobs(); ++t) {
      if (r[t] >= r[a]) sum += min_p(inst, t);
    }
    best = std::max(best, Rational(r[a] * m + sum, m));
  }
  return best;
}

inline Time brute_lb3(const Instance& inst, const Scenario& r) {
  const auto m = static_cast<Time>(inst.machines());
  Time best = 0;
  for (JobIndex a = 0; a < inst.jobs(); ++a) {
    Time count = 0;
    Time q = std::numeric_limits<Time>::max();
    for (JobIndex t = 0; t < inst.jobs(); ++t) {
      if (r[t] >= r[a]) {
        ++count;
        q = std::min(q, min_p(inst, t));
      }
    }
    best = std::max(best, r[a] + (count + m - 1) / m * q);
  }
  return best;
}

}  // namespace testing_support
