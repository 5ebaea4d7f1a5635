#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "regsched/nominal.hpp"
#include "regsched/simplex.hpp"

using namespace regsched;

TEST_CASE("small maximization LP") {
  // max 3x + 2y  s.t.  x + y <= 4,  x + 3y <= 6,  0 <= x <= 3.
  LinearModel m;
  m.maximize = true;
  m.add_var("x", 0, 3, false, 3);
  m.add_var("y", 0, kInf, false, 2);
  m.add_con("c1", {{0, 1.0}, {1, 1.0}}, Sense::LE, 4);
  m.add_con("c2", {{0, 1.0}, {1, 3.0}}, Sense::LE, 6);
  const LpResult r = solve_lp(m, true);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK_THAT(r.objective, Catch::Matchers::WithinAbs(11.0, 1e-7));
  CHECK_THAT(r.values[0], Catch::Matchers::WithinAbs(3.0, 1e-7));
  CHECK_THAT(r.values[1], Catch::Matchers::WithinAbs(1.0, 1e-7));
}

TEST_CASE("minimization with GE and EQ rows") {
  // min 2x + y  s.t.  x + y >= 3,  x - y = 1,  x, y >= 0.  Opt at (2, 1).
  LinearModel m;
  m.add_var("x", 0, kInf, false, 2);
  m.add_var("y", 0, kInf, false, 1);
  m.add_con("c1", {{0, 1.0}, {1, 1.0}}, Sense::GE, 3);
  m.add_con("c2", {{0, 1.0}, {1, -1.0}}, Sense::EQ, 1);
  const LpResult r = solve_lp(m, true);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK_THAT(r.objective, Catch::Matchers::WithinAbs(5.0, 1e-7));
  CHECK_THAT(r.values[0], Catch::Matchers::WithinAbs(2.0, 1e-7));
  CHECK_THAT(r.values[1], Catch::Matchers::WithinAbs(1.0, 1e-7));
}

TEST_CASE("infeasible LP is reported") {
  LinearModel m;
  m.add_var("x", 0, 1, false, 1);
  m.add_con("lo", {{0, 1.0}}, Sense::GE, 2);
  CHECK(solve_lp(m, true).status == LpStatus::Infeasible);

  LinearModel m2;
  m2.add_var("x", 0, kInf, false, 1);
  m2.add_var("y", 0, kInf, false, 1);
  m2.add_con("a", {{0, 1.0}, {1, 1.0}}, Sense::LE, 1);
  m2.add_con("b", {{0, 1.0}, {1, 1.0}}, Sense::GE, 2);
  CHECK(solve_lp(m2, true).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded LP is reported") {
  LinearModel m;
  m.maximize = true;
  m.add_var("x", 0, kInf, false, 1);
  m.add_var("y", 0, kInf, false, 0);
  m.add_con("c", {{0, 1.0}, {1, -1.0}}, Sense::LE, 1);
  CHECK(solve_lp(m, true).status == LpStatus::Unbounded);
}

TEST_CASE("objective constant is included") {
  LinearModel m;
  m.obj_constant = -7.5;
  m.add_var("x", 2, 2, false, 1);
  const LpResult r = solve_lp(m, true);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK_THAT(r.objective, Catch::Matchers::WithinAbs(-5.5, 1e-7));
}

TEST_CASE("negative and free variables") {
  // min x + y with x in [-5, -1], y free, y >= x - 1 rewritten as x - y <= 1.
  LinearModel m;
  m.add_var("x", -5, -1, false, 1);
  m.add_var("y", -kInf, kInf, false, 1);
  m.add_con("c", {{0, 1.0}, {1, -1.0}}, Sense::LE, 1);
  const LpResult r = solve_lp(m, true);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK_THAT(r.objective, Catch::Matchers::WithinAbs(-11.0, 1e-7));
  CHECK_THAT(r.values[0], Catch::Matchers::WithinAbs(-5.0, 1e-7));
  CHECK_THAT(r.values[1], Catch::Matchers::WithinAbs(-6.0, 1e-7));
}

TEST_CASE("relax=false rejects integer variables") {
  LinearModel m;
  m.add_var("x", 0, 1, true, 1);
  CHECK_THROWS_AS(solve_lp(m, false), Error);
}

TEST_CASE("degenerate LP with many ties still terminates") {
  // All rows identical; heavy degeneracy exercises the Bland fallback path.
  LinearModel m;
  m.maximize = true;
  for (int j = 0; j < 6; ++j)
    m.add_var("x" + std::to_string(j), 0, 1, false, 1);
  for (int i = 0; i < 8; ++i) {
    std::vector<std::pair<int, double>> terms;
    for (int j = 0; j < 6; ++j) terms.emplace_back(j, 1.0);
    m.add_con("r" + std::to_string(i), std::move(terms), Sense::LE, 3);
  }
  const LpResult r = solve_lp(m, true);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK_THAT(r.objective, Catch::Matchers::WithinAbs(3.0, 1e-7));
}

TEST_CASE("nominal LP equals the greedy weight, primal equals dual") {
  SplitMix64 rng(61);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = rng.uniform(1, 20);
    std::vector<int> dues(n), weights(n);
    std::vector<Job> jobs;
    for (int i = 0; i < n; ++i) {
      dues[i] = rng.uniform(1, n);
      weights[i] = rng.uniform(1, 100);
      jobs.push_back(Job{i + 1, weights[i], dues[i], dues[i]});
    }
    const Instance inst = test_helpers::make_instance(jobs);
    const long long greedy =
        solve_nominal(inst, Scenario{dues}).ontime.total_weight;

    const LpResult primal = solve_lp(build_nominal_lp(dues, weights), true);
    const LpResult dual = solve_lp(build_nominal_dual(dues, weights), true);
    REQUIRE(primal.status == LpStatus::Optimal);
    REQUIRE(dual.status == LpStatus::Optimal);
    REQUIRE_THAT(primal.objective,
                 Catch::Matchers::WithinAbs(static_cast<double>(greedy), 1e-6));
    REQUIRE_THAT(dual.objective,
                 Catch::Matchers::WithinAbs(primal.objective, 1e-6));
  }
}
