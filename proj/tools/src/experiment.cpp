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

#include "robust_sched/cli/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iterator>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "robust_sched/bounds.hpp"

namespace robust_sched::cli {

void ExperimentPlan::validate() const {
  if (n_values.empty()) throw InvalidArgument("experiment needs at least one n value");
  if (m_values.empty()) throw InvalidArgument("experiment needs at least one m value");
  if (algorithms.empty()) throw InvalidArgument("experiment needs at least one algorithm");
  if (repetitions < 1) throw InvalidArgument("repetitions must be >= 1");
  if (dataset == "custom" && !custom) throw InvalidArgument("custom dataset needs parameters");
}

GenParams base_params(const ExperimentPlan& plan, std::uint64_t seed) {
  const std::size_t n = *std::max_element(plan.n_values.begin(), plan.n_values.end());
  const std::size_t m = *std::max_element(plan.m_values.begin(), plan.m_values.end());
  GenParams p;
  if (plan.dataset == "custom") {
    p = *plan.custom;
    p.jobs = n;
    p.machines = m;
    p.seed = seed;
  } else {
    p = dataset_params(plan.dataset, n, m, seed);
  }
  return p;
}

std::size_t default_threads() {
  if (const char* env = std::getenv("ROBUST_SCHED_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<BenchRow> run_experiment(const ExperimentPlan& plan, std::size_t threads) {
  plan.validate();
  struct Cell {
    std::size_t rep;
    std::size_t n;
    std::size_t m;
  };
  std::vector<Cell> cells;
  for (std::size_t rep = 0; rep < plan.repetitions; ++rep) {
    for (std::size_t n : plan.n_values) {
      for (std::size_t m : plan.m_values) cells.push_back({rep, n, m});
    }
  }

  std::vector<std::vector<BenchRow>> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= cells.size()) return;
      try {
        const Cell& cell = cells[k];
        const std::uint64_t seed = plan.seed_base + cell.rep;
        const GenParams layout = base_params(plan, seed);
        // Regenerated per cell so workers share nothing; generation is cheap.
        const Instance base = generate(layout);
        const Instance inst = derive_family(base, layout, cell.n, cell.m, seed);
        for (Algorithm a : plan.algorithms) {
          const auto start = std::chrono::steady_clock::now();
          const Schedule s = solve(inst, {a, plan.bound_mode});
          const auto stop = std::chrono::steady_clock::now();
          BenchRow row;
          row.dataset = plan.dataset;
          row.n = cell.n;
          row.m = cell.m;
          row.algorithm = a;
          row.bound_mode = plan.bound_mode;
          row.seed = seed;
          row.relaxed_regret = relaxed_regret(s, inst).value;
          row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
          results[k].push_back(std::move(row));
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = cells.size();
      }
    }
  };

  const std::size_t workers = std::min(threads == 0 ? default_threads() : threads, cells.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  std::vector<BenchRow> rows;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(rows));
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.n, a.m, a.algorithm, a.seed) < std::tie(b.n, b.m, b.algorithm, b.seed);
  });
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  char ms[32];
  for (const auto& r : rows) {
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
    out << r.dataset << ',' << r.n << ',' << r.m << ',' << to_string(r.algorithm) << ','
        << (r.algorithm == Algorithm::kPartialMakespan ? "-" : to_string(r.bound_mode)) << ','
        << r.seed << ',' << r.relaxed_regret.to_decimal() << ',' << ms << '\n';
  }
  return out.str();
}

std::string to_markdown(const std::vector<BenchRow>& rows) {
  struct Acc {
    double regret = 0.0;
    double ms = 0.0;
    std::size_t count = 0;
  };
  std::map<std::tuple<std::size_t, std::size_t, Algorithm>, Acc> acc;
  std::vector<std::size_t> ns;
  std::vector<std::size_t> ms;
  std::vector<Algorithm> algos;
  auto add_unique = [](auto& v, auto x) {
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  };
  for (const auto& r : rows) {
    auto& a = acc[{r.n, r.m, r.algorithm}];
    a.regret += r.relaxed_regret.to_double();
    a.ms += r.wall_ms;
    ++a.count;
    add_unique(ns, r.n);
    add_unique(ms, r.m);
    add_unique(algos, r.algorithm);
  }
  std::sort(ns.begin(), ns.end());
  std::sort(ms.begin(), ms.end());
  std::sort(algos.begin(), algos.end());

  std::ostringstream out;
  auto table = [&](const char* title, bool regret) {
    out << "### " << title << "\n\n| n |";
    for (std::size_t m : ms) {
      for (Algorithm a : algos) out << " m=" << m << ' ' << to_string(a) << " |";
    }
    out << "\n|---|";
    for (std::size_t k = 0; k < ms.size() * algos.size(); ++k) out << "---|";
    out << '\n';
    char cell[32];
    for (std::size_t n : ns) {
      out << "| " << n << " |";
      for (std::size_t m : ms) {
        for (Algorithm a : algos) {
          const auto it = acc.find({n, m, a});
          if (it == acc.end()) {
            out << " |";
            continue;
          }
          const double v = (regret ? it->second.regret : it->second.ms) /
                           static_cast<double>(it->second.count);
          std::snprintf(cell, sizeof cell, regret ? "%.1f" : "%.2f", v);
          out << ' ' << cell << " |";
        }
      }
      out << '\n';
    }
    out << '\n';
  };
  table("Mean relaxed worst-case regret", true);
  table("Mean wall time [ms]", false);
  return out.str();
}

}  // namespace robust_sched::cli
