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

#include "robust_sched/bounds.hpp"
#include "robust_sched/heuristics.hpp"
#include "robust_sched/oracle.hpp"
#include "robust_sched/scenarios.hpp"
#include "support/brute_force.hpp"
#include "support/random_instances.hpp"

using namespace robust_sched;

namespace {

const Instance kLate({{3, 4}}, {{0, 10}, {0, 0}});

}  // namespace

TEST_SUITE("optimal_makespan") {
  TEST_CASE("small fixtures") {
    const auto late = optimal_makespan(kLate, Scenario({10, 0}));
    CHECK(late.value == 13);
    CHECK(late.schedule == Schedule({{1, 0}}));
    CHECK(late.certified);

    const Instance pair({{4, 7}, {5, 6}}, {{2, 2}, {3, 3}});
    CHECK(optimal_makespan(pair, Scenario({2, 3})).value == 9);

    const Instance one({{8}, {3}, {5}}, {{4, 6}});
    CHECK(optimal_makespan(one, Scenario({6})).value == 9);
  }

  TEST_CASE("returned schedule attains the value") {
    testing_support::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const Instance inst = testing_support::random_small_instance(rng, 7, 3);
      const Scenario r = testing_support::random_scenario(rng, inst);
      const auto opt = optimal_makespan(inst, r);
      CHECK_FALSE(validate_schedule(opt.schedule, inst).has_value());
      CHECK(makespan(opt.schedule, r, inst) == opt.value);
    }
  }

  TEST_CASE("matches full enumeration with and without pruning") {
    testing_support::Rng rng(23);
    for (int trial = 0; trial < 150; ++trial) {
      const Instance inst = testing_support::random_small_instance(rng, 6, 3);
      const Scenario r = testing_support::random_scenario(rng, inst);
      const Time brute = testing_support::brute_optimal_makespan(inst, r);
      CHECK(optimal_makespan(inst, r, {}, {.prune = true}).value == brute);
      CHECK(optimal_makespan(inst, r, {}, {.prune = false}).value == brute);
    }
  }

  TEST_CASE("limits") {
    std::vector<ReleaseInterval> rel(10, {0, 0});
    const Instance ten({std::vector<Time>(10, 1)}, rel);
    CHECK_THROWS_AS((void)optimal_makespan(ten, lower_scenario(ten)), LimitExceeded);
    CHECK(optimal_makespan(ten, lower_scenario(ten), {.max_jobs = 10}).value == 10);
    const Instance wide({{1}, {1}, {1}, {1}}, {{0, 0}});
    CHECK_THROWS_AS((void)optimal_makespan(wide, lower_scenario(wide)), LimitExceeded);
  }
}

TEST_SUITE("exact_worst_case_regret") {
  TEST_CASE("fixtures") {
    const auto good = exact_worst_case_regret(Schedule({{1, 0}}), kLate);
    CHECK(good.value == Rational(0));
    const auto bad = exact_worst_case_regret(Schedule({{0, 1}}), kLate);
    CHECK(bad.value == Rational(4));
    REQUIRE(bad.scenario_job.has_value());
    CHECK(*bad.scenario_job == 0);
    CHECK(bad.scenario == Scenario({10, 0}));
  }

  TEST_CASE("deterministic instance has zero regret for its optimum") {
    const Instance inst({{3, 4, 2}, {6, 1, 5}}, {{0, 0}, {2, 2}, {2, 2}});
    const auto opt = optimal_makespan(inst, lower_scenario(inst));
    CHECK(exact_worst_case_regret(opt.schedule, inst).value == Rational(0));
  }

  TEST_CASE("covered jobs are skipped unless all scenarios are requested") {
    const Instance inst({{10, 2}}, {{0, 0}, {3, 8}});
    const Schedule s({{0, 1}});
    CHECK(exact_worst_case_regret(s, inst).per_scenario.size() == 1);
    CHECK(exact_worst_case_regret(s, inst, {}, true).per_scenario.size() == 2);
  }

  TEST_CASE("agrees with brute force") {
    testing_support::Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
      const Instance inst = testing_support::random_small_instance(rng, 6, 3);
      const Schedule s = testing_support::random_schedule(rng, inst);
      CHECK(exact_worst_case_regret(s, inst, {}, true).value ==
            Rational(testing_support::brute_extreme_regret(inst, s)));
    }
  }
}

TEST_SUITE("grid_regret") {
  TEST_CASE("grid values include both endpoints") {
    CHECK(grid_values({0, 10}, 5) == std::vector<Time>{0, 3, 5, 8, 10});
    CHECK(grid_values({0, 2}, 5) == std::vector<Time>{0, 1, 2});
    CHECK(grid_values({4, 4}, 5) == std::vector<Time>{4});
    CHECK(grid_values({1, 7}, 2) == std::vector<Time>{1, 7});
    CHECK_THROWS_AS((void)grid_values({0, 1}, 1), InvalidArgument);
  }

  TEST_CASE("deterministic instance has a single grid point") {
    const Instance inst({{3, 4}, {2, 6}}, {{1, 1}, {2, 2}});
    const Schedule s({{1}, {0}});
    CHECK(grid_regret(s, inst, 5).value == exact_worst_case_regret(s, inst).value);
  }

  TEST_CASE("corner grid already contains the extreme scenarios") {
    testing_support::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      const Instance inst = testing_support::random_small_instance(rng, 4, 2);
      const Schedule s = testing_support::random_schedule(rng, inst);
      CHECK(grid_regret(s, inst, 2).value == exact_worst_case_regret(s, inst).value);
    }
  }

  TEST_CASE("fine grid on random instances") {
    testing_support::Rng rng(37);
    for (int trial = 0; trial < 30; ++trial) {
      testing_support::RandomShape shape;
      shape.jobs = 4;
      shape.machines = 2;
      const Instance inst = testing_support::random_instance(rng, shape);
      const Schedule s = testing_support::random_schedule(rng, inst);
      CHECK(grid_regret(s, inst, 6).value == exact_worst_case_regret(s, inst).value);
    }
  }

  TEST_CASE("grid size limit") {
    std::vector<ReleaseInterval> rel(8, {0, 100});
    const Instance inst({std::vector<Time>(8, 1)}, rel);
    CHECK_THROWS_AS((void)grid_regret(pm(inst), inst, 10), LimitExceeded);
  }
}

TEST_SUITE("exhaustive_min_regret") {
  TEST_CASE("disjoint windows and deterministic data are solved with zero regret") {
    const Instance windows({{2, 2}}, {{0, 1}, {5, 6}});
    const auto best = exhaustive_min_regret(windows);
    CHECK(best.regret == 0);
    CHECK(exact_worst_case_regret(pm(windows), windows).value == Rational(best.regret));

    const Instance fixed({{3, 4, 2}, {6, 1, 5}}, {{0, 0}, {2, 2}, {2, 2}});
    CHECK(exhaustive_min_regret(fixed).regret == 0);
  }

  TEST_CASE("returned schedule attains the optimum") {
    const auto best = exhaustive_min_regret(kLate);
    CHECK(best.regret == 0);
    CHECK(best.schedule == Schedule({{1, 0}}));
  }

  TEST_CASE("agrees with brute force and across pruning") {
    testing_support::Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
      const Instance inst = testing_support::random_small_instance(rng, 4, 2);
      const auto pruned = exhaustive_min_regret(inst, {}, {.prune = true});
      const auto plain = exhaustive_min_regret(inst, {}, {.prune = false});
      CHECK(pruned.regret == plain.regret);
      CHECK(pruned.regret == testing_support::brute_min_regret(inst));
      CHECK(exact_worst_case_regret(pruned.schedule, inst).value == Rational(pruned.regret));
      for (auto a : {Algorithm::kPartialMakespan, Algorithm::kPartialRegret,
                     Algorithm::kPartialRegretExtended}) {
        CHECK(exact_worst_case_regret(solve(inst, {a}), inst).value >= Rational(pruned.regret));
      }
    }
  }
}
