#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "regsched/errors.hpp"

namespace regsched {

// A unit-length job with an interval due-date [due_lo, due_hi].
struct Job {
  int id = 0;
  int weight = 1;
  int due_lo = 1;
  int due_hi = 1;
};

struct Instance {
  std::string name;
  std::vector<Job> jobs;

  int size() const { return static_cast<int>(jobs.size()); }

  long long total_weight() const {
    long long w = 0;
    for (const Job& j : jobs) w += j.weight;
    return w;
  }

  // Index of job `id` in `jobs`, or -1.
  int index_of(int id) const {
    for (int i = 0; i < size(); ++i)
      if (jobs[i].id == id) return i;
    return -1;
  }

  bool unit_weights() const {
    return std::all_of(jobs.begin(), jobs.end(),
                       [](const Job& j) { return j.weight == 1; });
  }

  bool normalized() const {
    const int n = size();
    return std::all_of(jobs.begin(), jobs.end(), [n](const Job& j) {
      return j.due_lo <= n && j.due_hi <= n;
    });
  }
};

// One realization of due-dates, parallel to Instance::jobs.
struct Scenario {
  std::vector<int> due;
};

// A permutation of job ids; order[t] runs at start slot t, completing at t+1.
struct Schedule {
  std::vector<int> order;
};

struct Evaluation {
  long long objective = 0;
  std::vector<int> late_ids;
  std::vector<int> ontime_ids;
};

inline Instance validate_and_normalize(const Instance& input) {
  if (input.jobs.empty()) throw EmptyInstance("instance has no jobs");
  std::unordered_map<int, int> seen;
  for (const Job& j : input.jobs) {
    if (j.weight < 1)
      throw NonPositiveWeight("job " + std::to_string(j.id) +
                              ": weight must be >= 1");
    if (j.due_lo < 1 || j.due_lo > j.due_hi)
      throw InvalidInterval("job " + std::to_string(j.id) +
                            ": require 1 <= d_lo <= d_hi");
    if (!seen.emplace(j.id, 1).second)
      throw DuplicateJobId("duplicate job id " + std::to_string(j.id));
  }
  Instance out = input;
  const int n = out.size();
  // Completion times never exceed n, so dues above n are equivalent to n.
  for (Job& j : out.jobs) {
    j.due_lo = std::min(j.due_lo, n);
    j.due_hi = std::min(j.due_hi, n);
  }
  return out;
}

namespace detail {

// start slot per job index; throws MismatchedInstance on a non-permutation.
inline std::vector<int> start_slots(const Instance& inst,
                                    const Schedule& sched) {
  const int n = inst.size();
  if (static_cast<int>(sched.order.size()) != n)
    throw MismatchedInstance("schedule length != instance size");
  std::vector<int> slot(n, -1);
  for (int t = 0; t < n; ++t) {
    const int idx = inst.index_of(sched.order[t]);
    if (idx < 0)
      throw MismatchedInstance("schedule references unknown job id " +
                               std::to_string(sched.order[t]));
    if (slot[idx] != -1)
      throw MismatchedInstance("schedule repeats job id " +
                               std::to_string(sched.order[t]));
    slot[idx] = t;
  }
  return slot;
}

inline void check_scenario(const Instance& inst, const Scenario& scen) {
  if (static_cast<int>(scen.due.size()) != inst.size())
    throw MismatchedInstance("scenario length != instance size");
}

}  // namespace detail

inline Evaluation evaluate(const Instance& inst, const Schedule& sched,
                           const Scenario& scen) {
  detail::check_scenario(inst, scen);
  const std::vector<int> slot = detail::start_slots(inst, sched);
  Evaluation ev;
  for (int i = 0; i < inst.size(); ++i) {
    if (slot[i] < scen.due[i]) {
      ev.ontime_ids.push_back(inst.jobs[i].id);
    } else {
      ev.late_ids.push_back(inst.jobs[i].id);
      ev.objective += inst.jobs[i].weight;
    }
  }
  return ev;
}

// Canonical form: on-time jobs first in nondecreasing due order (ties by id),
// late jobs after in their original relative order.  Cost-preserving.
inline Schedule canonicalize(const Instance& inst, const Schedule& sched,
                             const Scenario& scen) {
  detail::check_scenario(inst, scen);
  const std::vector<int> slot = detail::start_slots(inst, sched);
  std::vector<std::pair<int, int>> ontime;  // (due, id)
  std::vector<std::pair<int, int>> late;    // (slot, id)
  for (int i = 0; i < inst.size(); ++i) {
    if (slot[i] < scen.due[i])
      ontime.emplace_back(scen.due[i], inst.jobs[i].id);
    else
      late.emplace_back(slot[i], inst.jobs[i].id);
  }
  std::sort(ontime.begin(), ontime.end());
  std::sort(late.begin(), late.end());
  Schedule out;
  out.order.reserve(inst.size());
  for (const auto& [d, id] : ontime) out.order.push_back(id);
  for (const auto& [s, id] : late) out.order.push_back(id);
  return out;
}

}  // namespace regsched
