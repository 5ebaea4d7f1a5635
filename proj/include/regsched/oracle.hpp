#pragma once

#include <algorithm>
#include <vector>

#include "regsched/core.hpp"
#include "regsched/regret.hpp"

namespace regsched {

struct OracleResult {
  Schedule best_schedule;
  long long optimum = 0;
  unsigned long long explored = 0;
};

// Exhaustive minimum of Z(pi) over all n! permutations.  Ground truth only;
// shares no code with the solvers beyond the regret evaluator.
inline OracleResult brute_force_min_regret(const Instance& inst) {
  const int n = inst.size();
  if (n > 10) throw TooLarge("brute_force_min_regret guard: n > 10");
  std::vector<int> ids;
  for (const Job& j : inst.jobs) ids.push_back(j.id);
  std::sort(ids.begin(), ids.end());

  OracleResult res;
  res.optimum = inst.total_weight() + 1;
  do {
    Schedule cand{ids};
    const long long z = max_regret(inst, cand).regret;
    ++res.explored;
    if (z < res.optimum) {  // ties keep the lexicographically first order
      res.optimum = z;
      res.best_schedule = cand;
    }
  } while (std::next_permutation(ids.begin(), ids.end()));
  return res;
}

// Exhaustive maximum of R(pi, S) over the full integer scenario grid.
inline long long brute_force_max_regret(const Instance& inst,
                                        const Schedule& sched) {
  unsigned long long grid = 1;
  for (const Job& j : inst.jobs) {
    grid *= static_cast<unsigned long long>(j.due_hi - j.due_lo + 1);
    if (grid > 1000000ULL)
      throw TooLarge("brute_force_max_regret guard: scenario grid > 1e6");
  }
  const int n = inst.size();
  Scenario scen;
  for (const Job& j : inst.jobs) scen.due.push_back(j.due_lo);
  long long best = regret_in_scenario(inst, sched, scen);
  // odometer over the grid
  while (true) {
    int i = 0;
    while (i < n && scen.due[i] == inst.jobs[i].due_hi) {
      scen.due[i] = inst.jobs[i].due_lo;
      ++i;
    }
    if (i == n) break;
    ++scen.due[i];
    best = std::max(best, regret_in_scenario(inst, sched, scen));
  }
  return best;
}

}  // namespace regsched
