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

#include "doctest.h"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "json.hpp"
#include "robust_sched/cli/app.hpp"
#include "robust_sched/cli/experiment.hpp"
#include "robust_sched/json_io.hpp"

using namespace robust_sched;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "robust_sched");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("robust_sched_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string write(const TempDir& dir, const std::string& name, const std::string& text) {
  const std::string path = dir.file(name);
  json_io::write_file(path, text);
  return path;
}

nlohmann::json error_line(const Run& r) { return nlohmann::json::parse(r.err); }

// Drops the trailing wallMs column.
std::string strip_times(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::string out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

const char* kSmall = R"({"m":2,"n":4,"p":[[3,5,2,6],[4,4,3,2]],"release":[[0,4],[1,3],[2,9],[0,6]]})";
const char* kDisjoint = R"({"m":1,"n":2,"p":[[2,2]],"release":[[0,1],[5,6]]})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate writes the requested shape reproducibly") {
    TempDir dir;
    const auto a = run({"generate", "--dataset", "ds1", "--n", "50", "--m", "5", "--seed", "1",
                        "--out", dir.file("a.json")});
    REQUIRE(a.code == cli::kOk);
    const auto b = run({"generate", "--dataset", "ds1", "--n", "50", "--m", "5", "--seed", "1",
                        "--out", dir.file("b.json")});
    REQUIRE(b.code == cli::kOk);
    const std::string text = json_io::read_file(dir.file("a.json"));
    CHECK(text == json_io::read_file(dir.file("b.json")));
    const Instance inst = json_io::read_instance(text);
    CHECK(inst.jobs() == 50);
    CHECK(inst.machines() == 5);
  }

  TEST_CASE("generate rejects fewer jobs than segments") {
    const auto r = run({"generate", "--n", "5"});
    CHECK(r.code == cli::kFailure);
    CHECK(error_line(r)["error"] == "invalid-argument");
  }

  TEST_CASE("generate with custom parameters") {
    const auto r = run({"generate", "--dataset", "custom", "--n", "6", "--m", "2", "--segments",
                        "3", "--release-hi", "12", "--p-lo", "1", "--p-hi", "4"});
    REQUIRE(r.code == cli::kOk);
    const Instance inst = json_io::read_instance(r.out);
    CHECK(inst.jobs() == 6);
    for (JobIndex j = 0; j < 6; ++j) CHECK(inst.max_processing(j) <= 4);
  }

  TEST_CASE("solve a single job") {
    TempDir dir;
    const auto path = write(dir, "one.json", R"({"m":1,"n":1,"p":[[5]],"release":[[0,4]]})");
    const auto r = run({"solve", "--instance", path, "--algo", "pm", "--out", dir.file("s.json")});
    REQUIRE(r.code == cli::kOk);
    CHECK(json_io::read_schedule(json_io::read_file(dir.file("s.json"))) == Schedule(std::vector<std::vector<JobIndex>>{{0}}));
    const auto summary = nlohmann::json::parse(r.out);
    CHECK(summary["algorithm"] == "pm");
    CHECK(summary["relaxedRegretExact"] == "0");
    CHECK(summary["wallMs"].get<double>() >= 0.0);
  }

  TEST_CASE("solve without --out prints schedule then summary") {
    TempDir dir;
    const auto path = write(dir, "small.json", kSmall);
    const auto r = run({"solve", "--instance", path, "--algo", "pre", "--bound-mode", "short"});
    REQUIRE(r.code == cli::kOk);
    std::istringstream in(r.out);
    std::string schedule_line;
    std::string summary_line;
    std::getline(in, schedule_line);
    std::getline(in, summary_line);
    CHECK(json_io::read_schedule(schedule_line).job_count() == 4);
    CHECK(nlohmann::json::parse(summary_line)["boundMode"] == "short");
  }

  TEST_CASE("solve diagnostics") {
    TempDir dir;
    const auto bad = write(dir, "bad.json", "{\"m\": 1,");
    auto r = run({"solve", "--instance", bad});
    CHECK(r.code == cli::kFailure);
    CHECK(error_line(r)["error"] == "parse");
    CHECK(r.out.empty());

    const auto good = write(dir, "good.json", kSmall);
    r = run({"solve", "--instance", good, "--algo", "tabu"});
    CHECK(r.code == cli::kUsage);
    CHECK(error_line(r)["error"] == "usage");

    r = run({"solve", "--instance", dir.file("missing.json")});
    CHECK(r.code == cli::kFailure);
    CHECK(error_line(r)["error"] == "io");
  }

  TEST_CASE("evaluate in every mode") {
    TempDir dir;
    const auto inst = write(dir, "small.json", kSmall);
    REQUIRE(run({"solve", "--instance", inst, "--out", dir.file("s.json")}).code == cli::kOk);
    std::map<std::string, Rational> values;
    for (const std::string mode : {"relaxed", "exact", "grid"}) {
      const auto r = run({"evaluate", "--instance", inst, "--schedule", dir.file("s.json"),
                          "--mode", mode, "--grid-points", "5"});
      REQUIRE(r.code == cli::kOk);
      std::string read_mode;
      const RegretReport rep = json_io::read_regret_report(r.out, &read_mode);
      CHECK(read_mode == mode);
      CHECK(rep.value >= Rational(0));
      if (mode != "grid") CHECK(rep.scenario_job.has_value());
      values[mode] = rep.value;
    }
    CHECK(values["exact"] <= values["relaxed"]);
    CHECK(values["exact"] == values["grid"]);
  }

  TEST_CASE("evaluate beyond the oracle limits") {
    TempDir dir;
    REQUIRE(run({"generate", "--n", "10", "--m", "2", "--out", dir.file("i.json")}).code ==
            cli::kOk);
    REQUIRE(run({"solve", "--instance", dir.file("i.json"), "--out", dir.file("s.json")}).code ==
            cli::kOk);
    const auto r = run({"evaluate", "--instance", dir.file("i.json"), "--schedule",
                        dir.file("s.json"), "--mode", "exact"});
    CHECK(r.code == cli::kFailure);
    CHECK(error_line(r)["error"] == "limit-exceeded");
    const auto raised = run({"evaluate", "--instance", dir.file("i.json"), "--schedule",
                             dir.file("s.json"), "--mode", "exact", "--max-jobs", "10"});
    CHECK(raised.code == cli::kOk);
  }

  TEST_CASE("evaluate rejects a schedule for another instance") {
    TempDir dir;
    const auto inst = write(dir, "small.json", kSmall);
    const auto sched = write(dir, "s.json", R"({"machines":[[0,1],[2]]})");
    const auto r = run({"evaluate", "--instance", inst, "--schedule", sched});
    CHECK(r.code == cli::kFailure);
    CHECK(error_line(r)["error"] == "invalid-argument");
  }

  TEST_CASE("bench emits one row per cell, algorithm and repetition") {
    const auto r = run({"bench", "--dataset", "ds1", "--n-values", "50,100", "--m-values", "5",
                        "--algos", "pm,pr,pre", "--reps", "3", "--seed", "1"});
    REQUIRE(r.code == cli::kOk);
    CHECK(count_lines(r.out) == 1 + 18);
    CHECK(r.out.rfind(cli::kCsvHeader, 0) == 0);
    const auto again = run({"bench", "--dataset", "ds1", "--n-values", "50,100", "--m-values", "5",
                            "--algos", "pm,pr,pre", "--reps", "3", "--seed", "1", "--threads",
                            "3"});
    CHECK(strip_times(again.out) == strip_times(r.out));
  }

  TEST_CASE("bench argument errors") {
    auto r = run({"bench", "--algos", ""});
    CHECK(r.code == cli::kFailure);
    CHECK(error_line(r)["error"] == "invalid-argument");
    r = run({"bench", "--n-values", "50,x"});
    CHECK(r.code == cli::kFailure);
    r = run({"bench", "--reps", "0"});
    CHECK(r.code == cli::kFailure);
  }

  TEST_CASE("bench markdown and csv file") {
    TempDir dir;
    const auto r = run({"bench", "--n-values", "20", "--m-values", "2,3", "--algos", "pm,pr",
                        "--markdown", "--out", dir.file("t.csv")});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.find("| n | m=2 pm | m=2 pr | m=3 pm | m=3 pr |") != std::string::npos);
    CHECK(count_lines(json_io::read_file(dir.file("t.csv"))) == 1 + 4);
  }

  TEST_CASE("check passes on a small instance") {
    TempDir dir;
    const auto inst = write(dir, "small.json", kSmall);
    const auto r = run({"check", "--instance", inst});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS scenario reduction [pm]") != std::string::npos);
  }

  TEST_CASE("check reports the disjoint-interval property") {
    TempDir dir;
    const auto inst = write(dir, "disjoint.json", kDisjoint);
    const auto r = run({"check", "--instance", inst});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("PASS disjoint intervals: Z(x_PM) = 0") != std::string::npos);
  }

  TEST_CASE("check beyond the oracle limits") {
    TempDir dir;
    REQUIRE(run({"generate", "--n", "10", "--m", "2", "--out", dir.file("i.json")}).code ==
            cli::kOk);
    const auto r = run({"check", "--instance", dir.file("i.json")});
    CHECK(r.code == cli::kFailure);
    CHECK(error_line(r)["error"] == "limit-exceeded");
  }

  TEST_CASE("usage errors") {
    auto r = run({});
    CHECK(r.code == cli::kUsage);
    r = run({"frobnicate"});
    CHECK(r.code == cli::kUsage);
    r = run({"solve"});
    CHECK(r.code == cli::kUsage);
    CHECK(error_line(r)["error"] == "usage");
    r = run({"--help"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("generate") != std::string::npos);
  }
}

TEST_SUITE("experiment") {
  TEST_CASE("rows are ordered and independent of the worker count") {
    cli::ExperimentPlan plan;
    plan.n_values = {60, 30};
    plan.m_values = {3};
    plan.algorithms = {Algorithm::kPartialRegret, Algorithm::kPartialMakespan};
    plan.repetitions = 2;
    plan.seed_base = 5;
    const auto one = cli::run_experiment(plan, 1);
    const auto four = cli::run_experiment(plan, 4);
    REQUIRE(one.size() == 8);
    REQUIRE(four.size() == 8);
    for (std::size_t k = 0; k < one.size(); ++k) {
      CHECK(one[k].n == four[k].n);
      CHECK(one[k].algorithm == four[k].algorithm);
      CHECK(one[k].seed == four[k].seed);
      CHECK(one[k].relaxed_regret == four[k].relaxed_regret);
    }
    CHECK(one.front().n == 30);
    CHECK(one.front().algorithm == Algorithm::kPartialMakespan);
    CHECK(one.front().seed == 5);
    CHECK(one.back().n == 60);
  }

  TEST_CASE("experiment plan validation") {
    cli::ExperimentPlan plan;
    plan.n_values = {50};
    plan.m_values = {5};
    CHECK_THROWS_AS(plan.validate(), InvalidArgument);
    plan.algorithms = {Algorithm::kPartialMakespan};
    plan.repetitions = 0;
    CHECK_THROWS_AS(plan.validate(), InvalidArgument);
    plan.repetitions = 1;
    plan.dataset = "custom";
    CHECK_THROWS_AS(plan.validate(), InvalidArgument);
  }

  TEST_CASE("pm rows carry no bound mode") {
    cli::BenchRow row;
    row.dataset = "ds1";
    row.n = 50;
    row.m = 5;
    row.seed = 1;
    row.relaxed_regret = Rational(7, 2);
    row.wall_ms = 0.25;
    CHECK(cli::to_csv({row}) == std::string(cli::kCsvHeader) + "\nds1,50,5,pm,-,1,3.5,0.250\n");
  }
}
