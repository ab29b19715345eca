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

#include "robust_sched/cli/app.hpp"

#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "robust_sched/bounds.hpp"
#include "robust_sched/cli/checks.hpp"
#include "robust_sched/cli/experiment.hpp"
#include "robust_sched/datagen.hpp"
#include "robust_sched/heuristics.hpp"
#include "robust_sched/json_io.hpp"
#include "robust_sched/oracle.hpp"

namespace robust_sched::cli {
namespace {

using nlohmann::ordered_json;

void emit_error(std::ostream& err, std::string_view kind, std::string_view message) {
  ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  err << j.dump() << '\n';
}

// Writes to `path`, or to `out` when no path was given.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
  } else {
    json_io::write_file(path, text);
  }
}

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> items;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<std::size_t> parse_sizes(const std::string& list, const char* what) {
  std::vector<std::size_t> values;
  for (const auto& item : split(list)) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || item.front() == '-') {
      throw InvalidArgument(std::string("bad ") + what + " value '" + item + "'");
    }
    values.push_back(static_cast<std::size_t>(v));
  }
  return values;
}

struct GenerateOptions {
  std::string dataset = "ds1";
  std::size_t n = 50;
  std::size_t m = 5;
  std::uint64_t seed = 1;
  std::string out;
  GenParams custom;
};

struct SolveOptions {
  std::string instance;
  std::string algo = "pm";
  std::string bound_mode = "full";
  std::string out;
};

struct LimitOptions {
  std::size_t max_jobs = OracleLimits{}.max_jobs;
  std::size_t max_machines = OracleLimits{}.max_machines;
  double time_budget = OracleLimits{}.time_budget_seconds;

  OracleLimits limits() const { return {max_jobs, max_machines, time_budget}; }
};

struct EvaluateOptions {
  std::string instance;
  std::string schedule;
  std::string mode = "relaxed";
  std::size_t grid_points = 5;
  LimitOptions lim;
  std::string out;
};

struct BenchOptions {
  std::string dataset = "ds1";
  std::string n_values = "50,100";
  std::string m_values = "5";
  std::string algos = "pm,pr,pre";
  std::string bound_mode = "full";
  std::size_t reps = 1;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  std::string out;
  bool markdown = false;
  GenParams custom;
};

struct CheckOptions {
  std::string instance;
  std::size_t grid_points = 5;
  std::size_t grid_max_jobs = 5;
  LimitOptions lim;
};

void add_custom_params(CLI::App* cmd, GenParams& p) {
  cmd->add_option("--p-lo", p.processing_lo, "custom: smallest processing time")
      ->capture_default_str();
  cmd->add_option("--p-hi", p.processing_hi, "custom: largest processing time")
      ->capture_default_str();
  cmd->add_option("--release-hi", p.release_domain_hi, "custom: release domain end H")
      ->capture_default_str();
  cmd->add_option("--segments", p.segments, "custom: number of timeline segments w")
      ->capture_default_str();
  cmd->add_option("--offset-lo", p.offset_lo, "custom: smallest interval offset factor")
      ->capture_default_str();
  cmd->add_option("--offset-hi", p.offset_hi, "custom: largest interval offset factor")
      ->capture_default_str();
}

void add_limits(CLI::App* cmd, LimitOptions& lim) {
  cmd->add_option("--max-jobs", lim.max_jobs, "oracle job limit")->capture_default_str();
  cmd->add_option("--max-machines", lim.max_machines, "oracle machine limit")
      ->capture_default_str();
  cmd->add_option("--time-budget", lim.time_budget, "oracle time budget in seconds")
      ->capture_default_str();
}

const std::vector<std::string> kDatasets{"ds1", "ds2", "custom"};

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  GenParams p;
  if (o.dataset == "custom") {
    p = o.custom;
    p.jobs = o.n;
    p.machines = o.m;
    p.seed = o.seed;
  } else {
    p = dataset_params(o.dataset, o.n, o.m, o.seed);
  }
  const Instance inst = generate(p);
  emit(out, o.out, json_io::write_instance(inst, p));
  return kOk;
}

int cmd_solve(const SolveOptions& o, std::ostream& out) {
  const Instance inst = json_io::read_instance(json_io::read_file(o.instance));
  const HeuristicConfig cfg{parse_algorithm(o.algo), parse_bound_mode(o.bound_mode)};
  const auto start = std::chrono::steady_clock::now();
  const Schedule s = solve(inst, cfg);
  const auto stop = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
  const RegretReport relaxed = relaxed_regret(s, inst);

  emit(out, o.out, json_io::write_schedule(s));
  ordered_json summary;
  summary["algorithm"] = to_string(cfg.algorithm);
  summary["boundMode"] =
      cfg.algorithm == Algorithm::kPartialMakespan ? "-" : std::string(to_string(cfg.bound_mode));
  summary["jobs"] = inst.jobs();
  summary["machines"] = inst.machines();
  summary["relaxedRegret"] = relaxed.value.to_double();
  summary["relaxedRegretExact"] = relaxed.value.to_string();
  if (relaxed.scenario_job) summary["scenarioJob"] = *relaxed.scenario_job;
  summary["wallMs"] = ms;
  out << summary.dump() << '\n';
  return kOk;
}

int cmd_evaluate(const EvaluateOptions& o, std::ostream& out) {
  const Instance inst = json_io::read_instance(json_io::read_file(o.instance));
  const Schedule s = json_io::read_schedule(json_io::read_file(o.schedule));
  require_valid(s, inst);
  RegretReport report;
  if (o.mode == "relaxed") {
    report = relaxed_regret(s, inst);
  } else if (o.mode == "exact") {
    report = exact_worst_case_regret(s, inst, o.lim.limits());
  } else {
    report = grid_regret(s, inst, o.grid_points, o.lim.limits());
  }
  emit(out, o.out, json_io::write_regret_report(report, o.mode));
  return kOk;
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  ExperimentPlan plan;
  plan.dataset = o.dataset;
  if (o.dataset == "custom") plan.custom = o.custom;
  plan.n_values = parse_sizes(o.n_values, "--n-values");
  plan.m_values = parse_sizes(o.m_values, "--m-values");
  for (const auto& a : split(o.algos)) plan.algorithms.push_back(parse_algorithm(a));
  plan.bound_mode = parse_bound_mode(o.bound_mode);
  plan.repetitions = o.reps;
  plan.seed_base = o.seed;
  const auto rows = run_experiment(plan, o.threads);
  if (o.markdown) {
    if (!o.out.empty()) json_io::write_file(o.out, to_csv(rows));
    out << to_markdown(rows);
  } else {
    emit(out, o.out, to_csv(rows));
  }
  return kOk;
}

int cmd_check(const CheckOptions& o, std::ostream& out) {
  const Instance inst = json_io::read_instance(json_io::read_file(o.instance));
  const auto results = run_property_checks(inst, o.lim.limits(), o.grid_points, o.grid_max_jobs);
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& r : results) {
    const char* tag = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
    out << tag << ' ' << r.name << ": " << r.detail << '\n';
    if (r.skipped) ++skipped;
    else if (!r.passed) ++failed;
  }
  out << (results.size() - failed - skipped) << " passed, " << failed << " failed, " << skipped
      << " skipped\n";
  return failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimax-regret scheduling with interval release dates", "robust_sched"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "print help for all subcommands");

  GenerateOptions gen;
  auto* generate_cmd = app.add_subcommand("generate", "generate a random instance");
  generate_cmd->add_option("--dataset", gen.dataset, "ds1, ds2 or custom")
      ->check(CLI::IsMember(kDatasets))
      ->capture_default_str();
  generate_cmd->add_option("--n", gen.n, "number of jobs")->capture_default_str();
  generate_cmd->add_option("--m", gen.m, "number of machines")->capture_default_str();
  generate_cmd->add_option("--seed", gen.seed, "generator seed")->capture_default_str();
  generate_cmd->add_option("--out", gen.out, "output file (default: stdout)");
  add_custom_params(generate_cmd, gen.custom);

  SolveOptions sol;
  auto* solve_cmd = app.add_subcommand("solve", "run a constructive heuristic");
  solve_cmd->add_option("--instance", sol.instance, "instance JSON file")->required();
  solve_cmd->add_option("--algo", sol.algo, "pm, pr or pre")
      ->check(CLI::IsMember({"pm", "pr", "pre"}))
      ->capture_default_str();
  solve_cmd->add_option("--bound-mode", sol.bound_mode, "full or short")
      ->check(CLI::IsMember({"full", "short"}))
      ->capture_default_str();
  solve_cmd->add_option("--out", sol.out, "schedule output file (default: stdout)");

  EvaluateOptions ev;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "worst-case regret of a schedule");
  evaluate_cmd->add_option("--instance", ev.instance, "instance JSON file")->required();
  evaluate_cmd->add_option("--schedule", ev.schedule, "schedule JSON file")->required();
  evaluate_cmd->add_option("--mode", ev.mode, "relaxed, exact or grid")
      ->check(CLI::IsMember({"relaxed", "exact", "grid"}))
      ->capture_default_str();
  evaluate_cmd->add_option("--grid-points", ev.grid_points, "grid points per interval")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_limits(evaluate_cmd, ev.lim);
  evaluate_cmd->add_option("--out", ev.out, "report output file (default: stdout)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "run an experiment grid and emit CSV");
  bench_cmd->add_option("--dataset", bench.dataset, "ds1, ds2 or custom")
      ->check(CLI::IsMember(kDatasets))
      ->capture_default_str();
  bench_cmd->add_option("--n-values", bench.n_values, "comma-separated job counts")
      ->capture_default_str();
  bench_cmd->add_option("--m-values", bench.m_values, "comma-separated machine counts")
      ->capture_default_str();
  bench_cmd->add_option("--algos", bench.algos, "comma-separated subset of pm,pr,pre")
      ->capture_default_str();
  bench_cmd->add_option("--bound-mode", bench.bound_mode, "full or short")
      ->check(CLI::IsMember({"full", "short"}))
      ->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "repetitions per cell")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "seed of the first repetition")
      ->capture_default_str();
  bench_cmd->add_option("--threads", bench.threads,
                        "worker threads (0: ROBUST_SCHED_THREADS or hardware concurrency)")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV output file (default: stdout)");
  bench_cmd->add_flag("--markdown", bench.markdown, "print summary tables to stdout");
  add_custom_params(bench_cmd, bench.custom);

  CheckOptions chk;
  auto* check_cmd = app.add_subcommand("check", "run the property battery against the oracle");
  check_cmd->add_option("--instance", chk.instance, "instance JSON file")->required();
  check_cmd->add_option("--grid-points", chk.grid_points, "grid points per interval")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}))
      ->capture_default_str();
  check_cmd->add_option("--grid-max-jobs", chk.grid_max_jobs,
                        "largest n for the grid comparison")
      ->capture_default_str();
  add_limits(check_cmd, chk.lim);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return kUsage;
  }

  try {
    if (generate_cmd->parsed()) return cmd_generate(gen, out);
    if (solve_cmd->parsed()) return cmd_solve(sol, out);
    if (evaluate_cmd->parsed()) return cmd_evaluate(ev, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, out);
    if (check_cmd->parsed()) return cmd_check(chk, out);
  } catch (const ParseError& e) {
    emit_error(err, "parse", e.what());
    return kFailure;
  } catch (const LimitExceeded& e) {
    emit_error(err, "limit-exceeded", e.what());
    return kFailure;
  } catch (const InvalidArgument& e) {
    emit_error(err, "invalid-argument", e.what());
    return kFailure;
  } catch (const Error& e) {
    emit_error(err, "io", e.what());
    return kFailure;
  } catch (const std::exception& e) {
    emit_error(err, "internal", e.what());
    return kFailure;
  }
  return kUsage;
}

}  // namespace robust_sched::cli
