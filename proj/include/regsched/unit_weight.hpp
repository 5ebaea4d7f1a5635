#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "regsched/core.hpp"
#include "regsched/nominal.hpp"
#include "regsched/regret.hpp"

namespace regsched {

struct AlgoAResult {
  Schedule schedule;
  OntimeSet ontime_set;  // the set I
  long long regret = 0;
};

// True iff the jobs of L(pi) appear in nonincreasing d+ order.
inline bool late_order_check(const Instance& inst, const Schedule& sched) {
  const std::vector<int> slot = detail::start_slots(inst, sched);
  int prev_hi = -1;
  bool have_prev = false;
  for (int t = 0; t < inst.size(); ++t) {
    const int idx = inst.index_of(sched.order[t]);
    if (slot[idx] < inst.jobs[idx].due_lo) continue;  // not in L(pi)
    if (have_prev && inst.jobs[idx].due_hi > prev_hi) return false;
    prev_hi = inst.jobs[idx].due_hi;
    have_prev = true;
  }
  return true;
}

// Exact robust solver for the unit-weight case.
// Step 1: greedy maximal independent set I w.r.t. the due lower bounds,
// processing jobs by nondecreasing d+ (ties by id).  Step 2: place I as late
// as feasible (every start < d-), which keeps I in EDD order of d- and frees
// the earliest possible slots.  Step 3: the remaining jobs take those free
// slots in nonincreasing d+ order (ties by id); an early slot s caps a late
// job's worst-case due at min(s, d+), which is what starves the adversary's
// alternative schedule.
inline AlgoAResult solve_unit(const Instance& inst) {
  if (!inst.unit_weights())
    throw NonUnitWeights("solve_unit requires all weights equal to 1");
  if (!inst.normalized())
    throw UnnormalizedInstance("solve_unit requires a normalized instance");
  const int n = inst.size();

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (inst.jobs[a].due_hi != inst.jobs[b].due_hi)
      return inst.jobs[a].due_hi < inst.jobs[b].due_hi;
    return inst.jobs[a].id < inst.jobs[b].id;
  });

  AlgoAResult res;
  std::vector<int> picked_dues;
  std::vector<int> picked;
  for (int idx : order) {
    picked_dues.push_back(inst.jobs[idx].due_lo);
    if (is_independent(picked_dues)) {
      picked.push_back(idx);
    } else {
      picked_dues.pop_back();
    }
  }

  for (int idx : picked) {
    res.ontime_set.ids.push_back(inst.jobs[idx].id);
    res.ontime_set.total_weight += inst.jobs[idx].weight;
  }
  std::sort(res.ontime_set.ids.begin(), res.ontime_set.ids.end());

  std::vector<char> in_i(n, 0);
  for (int idx : picked) in_i[idx] = 1;

  // Latest-feasible placement of I: walk the slots backwards, each time
  // taking the unplaced I job with the largest d- that still fits.
  std::vector<std::pair<int, int>> pending;  // (d-, idx) over I, sorted
  for (int idx : picked)
    pending.emplace_back(inst.jobs[idx].due_lo, idx);
  std::sort(pending.begin(), pending.end());
  std::vector<int> slot_job(n, -1);  // job index per slot
  for (int s = n - 1; s >= 0; --s) {
    if (pending.empty()) break;
    const auto [lo, idx] = pending.back();
    if (lo > s) {
      slot_job[s] = idx;
      pending.pop_back();
    }
  }

  std::vector<std::pair<int, int>> rest;  // (-d+, id) over I'
  for (int i = 0; i < n; ++i)
    if (!in_i[i]) rest.emplace_back(-inst.jobs[i].due_hi, inst.jobs[i].id);
  std::sort(rest.begin(), rest.end());
  size_t next_late = 0;
  for (int s = 0; s < n; ++s)
    if (slot_job[s] == -1) slot_job[s] = inst.index_of(rest[next_late++].second);

  for (int s = 0; s < n; ++s) res.schedule.order.push_back(inst.jobs[slot_job[s]].id);

  res.regret = max_regret(inst, res.schedule).regret;
  return res;
}

}  // namespace regsched
