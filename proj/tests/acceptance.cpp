// Acceptance suite: one line of output per criterion, nonzero exit on any
// failure.  Built as a plain executable so the checks read top to bottom.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "regsched/bench.hpp"
#include "regsched/bnb.hpp"
#include "regsched/gen.hpp"
#include "regsched/heuristics.hpp"
#include "regsched/oracle.hpp"
#include "regsched/regret.hpp"
#include "regsched/simplex.hpp"
#include "regsched/unit_weight.hpp"

using namespace regsched;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Instance random_instance(SplitMix64& rng, int n, int max_width,
                         int max_weight) {
  Instance inst;
  inst.name = "accept";
  for (int i = 0; i < n; ++i) {
    const int lo = rng.uniform(1, n);
    const int width = rng.uniform(0, max_width);
    inst.jobs.push_back(
        Job{i + 1, max_weight == 1 ? 1 : rng.uniform(1, max_weight), lo,
            lo + width});
  }
  return validate_and_normalize(inst);
}

Schedule random_schedule(SplitMix64& rng, const Instance& inst) {
  Schedule s;
  for (const Job& j : inst.jobs) s.order.push_back(j.id);
  for (int i = inst.size() - 1; i > 0; --i)
    std::swap(s.order[i], s.order[rng.uniform(0, i)]);
  return s;
}

// 1. Closed-form worst case vs. exhaustive scenario grid.
void criterion1() {
  SplitMix64 rng(1001);
  int checked = 0;
  bool ok = true;
  for (int iter = 0; iter < 200 && ok; ++iter) {
    const int n = rng.uniform(1, 6);
    const Instance inst = random_instance(rng, n, 4, 100);
    const Schedule pi = random_schedule(rng, inst);
    if (max_regret(inst, pi).regret != brute_force_max_regret(inst, pi))
      ok = false;
    ++checked;
  }
  report(1, ok && checked == 200,
         "max_regret equals the scenario-grid maximum on 200 random pairs");
}

// 2. Branch and bound vs. permutation oracle.
void criterion2() {
  bool ok = true;
  for (int iter = 0; iter < 200 && ok; ++iter) {
    const int n = 2 + iter % 7;  // 2..8
    const Instance inst = generate(
        GenProfile{GenKind::HighUncertainty, n, 2000 + static_cast<uint64_t>(iter)});
    const BnbResult r = bnb_solve(inst);
    if (r.status != BnbStatus::Optimal ||
        r.ub != brute_force_min_regret(inst).optimum)
      ok = false;
  }
  report(2, ok, "bnb optimum equals the brute-force optimum on 200 instances");
}

// 3. Unit-weight exact algorithm vs. oracle.
void criterion3() {
  SplitMix64 rng(3001);
  bool ok = true;
  for (int iter = 0; iter < 500 && ok; ++iter) {
    const int n = rng.uniform(2, 9);
    const Instance inst = random_instance(rng, n, n, 1);
    if (solve_unit(inst).regret != brute_force_min_regret(inst).optimum)
      ok = false;
  }
  report(3, ok, "unit-weight solver matches the oracle on 500 instances");
}

// 4. Nominal LP integrality.
void criterion4() {
  SplitMix64 rng(4001);
  bool ok = true;
  for (int iter = 0; iter < 500 && ok; ++iter) {
    const int n = rng.uniform(1, 30);
    std::vector<int> dues(n), weights(n);
    Instance inst;
    inst.name = "nominal";
    for (int i = 0; i < n; ++i) {
      dues[i] = rng.uniform(1, n);
      weights[i] = rng.uniform(1, 100);
      inst.jobs.push_back(Job{i + 1, weights[i], dues[i], dues[i]});
    }
    inst = validate_and_normalize(inst);
    const long long greedy =
        solve_nominal(inst, Scenario{dues}).ontime.total_weight;
    const LpResult primal = solve_lp(build_nominal_lp(dues, weights), true);
    const LpResult dual = solve_lp(build_nominal_dual(dues, weights), true);
    if (primal.status != LpStatus::Optimal || dual.status != LpStatus::Optimal ||
        std::fabs(primal.objective - static_cast<double>(greedy)) > 1e-6 ||
        std::fabs(primal.objective - dual.objective) > 1e-6)
      ok = false;
  }
  report(4, ok,
         "nominal LP equals the greedy weight and its dual on 500 instances");
}

// 5. Solver self-consistency: reported objective == recomputed regret.
void criterion5() {
  bool ok = true;
  for (int iter = 0; iter < 60 && ok; ++iter) {
    const GenKind kind =
        (iter % 2 == 0) ? GenKind::HalfUncertain : GenKind::HighUncertainty;
    const int n = 2 + iter % 9;  // 2..10
    const Instance inst =
        generate(GenProfile{kind, n, 5000 + static_cast<uint64_t>(iter)});
    const BnbResult r = bnb_solve(inst);
    if (r.ub != max_regret(inst, r.incumbent).regret) ok = false;
    if (r.status == BnbStatus::Optimal &&
        std::llround(r.lb) != r.ub)
      ok = false;
  }
  report(5, ok, "reported objective equals the recomputed max regret");
}

// 6 + 7. Heuristic dominance and desk-scale performance.
void criteria6and7() {
  bool dominance = true;
  bool perf = true;
  std::map<int, double> mean_exact, mean_lb, mean_mp;
  for (int n : {10, 15, 20}) {
    for (int rep = 0; rep < 10; ++rep) {
      const Instance inst = generate(
          GenProfile{GenKind::HalfUncertain, n, 6000 + static_cast<uint64_t>(rep)});
      const auto t0 = std::chrono::steady_clock::now();
      const BnbResult r = bnb_solve(inst);
      const double secs = seconds_since(t0);
      if (r.status != BnbStatus::Optimal) perf = false;
      if (n == 20 && secs >= 300.0) perf = false;
      const long long z_exact = r.ub;
      const long long z_lb = max_regret(inst, lb_heuristic(inst)).regret;
      const long long z_mp = max_regret(inst, mp_heuristic(inst)).regret;
      if (z_exact > z_lb || z_exact > z_mp) dominance = false;
      mean_exact[n] += static_cast<double>(z_exact) / 10.0;
      mean_lb[n] += static_cast<double>(z_lb) / 10.0;
      mean_mp[n] += static_cast<double>(z_mp) / 10.0;
    }
  }
  for (int n : {10, 15, 20})
    if (!(mean_exact[n] <= mean_lb[n] + 1e-9 && mean_lb[n] <= mean_mp[n] + 1e-9))
      dominance = false;
  report(6, dominance,
         "exact <= lb <= mp per instance and in the mean (n in {10,15,20})");
  report(7, perf, "every n=20 instance proven optimal within 300 s");
}

// 8. Decomposition sanity.
void criterion8() {
  bool ok = true;
  for (int rep = 0; rep < 50 && ok; ++rep) {
    const Instance inst = generate(
        GenProfile{GenKind::HalfUncertain, 20, 8000 + static_cast<uint64_t>(rep)});
    DecompOptions opt;
    opt.m = 4;
    opt.seed = static_cast<uint64_t>(rep);
    opt.polish_budget = 0;
    const Schedule raw = decomposition(inst, opt);
    try {
      detail::start_slots(inst, raw);  // feasibility: a real permutation
    } catch (const Error&) {
      ok = false;
      break;
    }
    const long long z_raw = max_regret(inst, raw).regret;
    const long long z_exact = bnb_solve(inst).ub;
    if (z_raw < z_exact) ok = false;

    opt.polish_budget = 30;
    const long long z_pol = max_regret(inst, decomposition(inst, opt)).regret;
    if (z_pol > z_raw) ok = false;
  }
  report(8, ok,
         "decomposition is feasible, never beats the optimum, polish never "
         "hurts (50 instances, n=20)");
}

// 9. Gap metric to six decimals.
void criterion9() {
  struct Pair {
    double ub, lb, want;
  };
  const std::vector<Pair> pairs = {
      {10, 10, 0.0},        {10, 5, 50.0},       {8, 6, 25.0},
      {3, 2, 100.0 / 3.0},  {1, 0, 100.0},       {123456, 123455,
                                                  (1.0 / 123456.0) * 100.0},
      {7, 7, 0.0},          {100, 99.5, 0.5},
  };
  bool ok = true;
  for (const Pair& p : pairs) {
    const double got = gap_pct(p.ub, p.lb);
    if (std::fabs(got - p.want) > 5e-7) ok = false;
  }
  if (gap_pct(0, 0) != 0.0) ok = false;
  report(9, ok, "gap metric matches (UB-LB)/UB*100 to 6 decimals");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criteria6and7();
  criterion8();
  criterion9();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
