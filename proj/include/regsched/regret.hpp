#pragma once

#include <vector>

#include "regsched/core.hpp"
#include "regsched/nominal.hpp"

namespace regsched {

struct RegretReport {
  Schedule schedule;        // the player's schedule pi
  Scenario worst_scenario;  // adversary's best due-date choice
  Schedule alternative;     // sigma: optimal under worst_scenario
  long long f_pi = 0;
  long long f_star = 0;
  long long regret = 0;

  // L(pi): jobs starting no earlier than their due-date lower bound.
  std::vector<int> l_set(const Instance& inst) const {
    const std::vector<int> slot = detail::start_slots(inst, schedule);
    std::vector<int> out;
    for (int i = 0; i < inst.size(); ++i)
      if (slot[i] >= inst.jobs[i].due_lo) out.push_back(inst.jobs[i].id);
    return out;
  }
};

// Worst-case due-date of a job starting at `slot` with interval [lo, hi].
inline int worst_case_due(int slot, int lo, int hi) {
  if (slot < lo) return hi;       // always on-time
  if (slot >= hi) return hi;      // always late
  return slot;                    // late in pi, maximally useful to sigma
}

inline Scenario worst_case_scenario(const Instance& inst,
                                    const Schedule& sched) {
  const std::vector<int> slot = detail::start_slots(inst, sched);
  Scenario s;
  s.due.reserve(inst.size());
  for (int i = 0; i < inst.size(); ++i)
    s.due.push_back(
        worst_case_due(slot[i], inst.jobs[i].due_lo, inst.jobs[i].due_hi));
  return s;
}

inline long long regret_in_scenario(const Instance& inst,
                                    const Schedule& sched,
                                    const Scenario& scen) {
  const long long f_pi = evaluate(inst, sched, scen).objective;
  return f_pi - solve_nominal(inst, scen).f_star;
}

inline RegretReport max_regret(const Instance& inst, const Schedule& sched) {
  RegretReport rep;
  rep.schedule = sched;
  rep.worst_scenario = worst_case_scenario(inst, sched);
  rep.f_pi = evaluate(inst, sched, rep.worst_scenario).objective;
  NominalResult nom = solve_nominal(inst, rep.worst_scenario);
  rep.alternative = nom.schedule;
  rep.f_star = nom.f_star;
  rep.regret = rep.f_pi - rep.f_star;
  return rep;
}

}  // namespace regsched
