#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "regsched/bnb.hpp"
#include "regsched/heuristics.hpp"
#include "regsched/oracle.hpp"

using namespace regsched;
using test_helpers::e1;
using test_helpers::make_instance;

TEST_CASE("lb heuristic keeps the heaviest job on time") {
  // Lower-bound dues are (1, 1): only one job fits, the greedy keeps J2.
  const Schedule s = lb_heuristic(e1());
  CHECK(s.order == std::vector<int>{2, 1});
  CHECK(max_regret(e1(), s).regret == 3);
}

TEST_CASE("mp heuristic uses floored mid-points") {
  // J1 [1,2] -> mid 1, J2 [2,2] -> mid 2: both fit on time.
  const Instance inst = make_instance({Job{1, 3, 1, 2}, Job{2, 5, 2, 2}});
  const Schedule s = mp_heuristic(inst);
  CHECK(s.order == std::vector<int>{1, 2});
}

TEST_CASE("heuristic schedules are valid permutations") {
  SplitMix64 rng(111);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = rng.uniform(2, 10);
    const Instance inst = test_helpers::random_instance(rng, n);
    for (const Schedule& s : {lb_heuristic(inst), mp_heuristic(inst)}) {
      REQUIRE_NOTHROW(detail::start_slots(inst, s));
      REQUIRE(max_regret(inst, s).regret >=
              0);  // feasible and evaluable
    }
  }
}

TEST_CASE("heuristics never beat the exact optimum") {
  SplitMix64 rng(113);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = rng.uniform(2, 7);
    const Instance inst = test_helpers::random_instance(rng, n);
    const long long opt = brute_force_min_regret(inst).optimum;
    REQUIRE(max_regret(inst, lb_heuristic(inst)).regret >= opt);
    REQUIRE(max_regret(inst, mp_heuristic(inst)).regret >= opt);
  }
}

TEST_CASE("decomposition block count is validated") {
  const Instance inst = test_helpers::e1();
  DecompOptions opt;
  opt.polish_budget = 0;
  opt.m = 1;
  CHECK_THROWS_AS(decomposition(inst, opt), InvalidBlockCount);
  opt.m = 3;  // > n
  CHECK_THROWS_AS(decomposition(inst, opt), InvalidBlockCount);
  opt.m = 2;
  CHECK_NOTHROW(decomposition(inst, opt));
}

TEST_CASE("decomposition is deterministic for a fixed seed") {
  SplitMix64 rng(117);
  const Instance inst = test_helpers::random_instance(rng, 10);
  DecompOptions opt;
  opt.m = 3;
  opt.polish_budget = 0;
  opt.seed = 42;
  const Schedule a = decomposition(inst, opt);
  const Schedule b = decomposition(inst, opt);
  CHECK(a.order == b.order);
}

TEST_CASE("decomposition without polish is feasible; polish never hurts") {
  SplitMix64 rng(119);
  for (int iter = 0; iter < 10; ++iter) {
    const int n = rng.uniform(6, 10);
    const Instance inst = test_helpers::random_instance(rng, n);
    DecompOptions opt;
    opt.m = 3;
    opt.seed = iter;
    opt.polish_budget = 0;
    const Schedule raw = decomposition(inst, opt);
    REQUIRE_NOTHROW(detail::start_slots(inst, raw));
    const long long z_raw = max_regret(inst, raw).regret;

    opt.polish_budget = 30;
    const long long z_pol = max_regret(inst, decomposition(inst, opt)).regret;
    REQUIRE(z_pol <= z_raw);

    const long long opt_z = bnb_solve(inst).ub;
    REQUIRE(z_raw >= opt_z);
    REQUIRE(z_pol >= opt_z);
  }
}
