#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "regsched/core.hpp"

namespace regsched {

// Jobs that can all be scheduled on-time simultaneously.
struct OntimeSet {
  std::vector<int> ids;  // sorted ascending
  long long total_weight = 0;
};

struct NominalResult {
  OntimeSet ontime;
  Schedule schedule;
  long long f_star = 0;
};

// True iff for every t >= 1 at most t of the dues are <= t.
inline bool is_independent(std::vector<int> dues) {
  std::sort(dues.begin(), dues.end());
  for (size_t i = 0; i < dues.size(); ++i)
    if (dues[i] < static_cast<int>(i) + 1) return false;
  return true;
}

// Greedy over the scheduling matroid: jobs by nonincreasing weight (ties by
// ascending id), kept while the picked dues stay independent.  The schedule
// is the canonical form: on-time set in EDD order, late jobs after.
inline NominalResult solve_nominal(const Instance& inst,
                                   const Scenario& scen) {
  detail::check_scenario(inst, scen);
  const int n = inst.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (inst.jobs[a].weight != inst.jobs[b].weight)
      return inst.jobs[a].weight > inst.jobs[b].weight;
    return inst.jobs[a].id < inst.jobs[b].id;
  });

  NominalResult res;
  std::vector<int> picked_dues;
  std::vector<int> picked;  // job indices
  for (int idx : order) {
    picked_dues.push_back(scen.due[idx]);
    if (is_independent(picked_dues)) {
      picked.push_back(idx);
    } else {
      picked_dues.pop_back();
    }
  }

  for (int idx : picked) {
    res.ontime.ids.push_back(inst.jobs[idx].id);
    res.ontime.total_weight += inst.jobs[idx].weight;
  }
  std::sort(res.ontime.ids.begin(), res.ontime.ids.end());
  res.f_star = inst.total_weight() - res.ontime.total_weight;

  // EDD placement of the on-time set, ties by id, then late jobs by id.
  std::vector<std::pair<int, int>> edd;  // (due, id)
  std::vector<char> is_ontime(n, 0);
  for (int idx : picked) {
    edd.emplace_back(scen.due[idx], inst.jobs[idx].id);
    is_ontime[idx] = 1;
  }
  std::sort(edd.begin(), edd.end());
  std::vector<int> late_ids;
  for (int i = 0; i < n; ++i)
    if (!is_ontime[i]) late_ids.push_back(inst.jobs[i].id);
  std::sort(late_ids.begin(), late_ids.end());

  for (const auto& [d, id] : edd) res.schedule.order.push_back(id);
  for (int id : late_ids) res.schedule.order.push_back(id);
  return res;
}

}  // namespace regsched
