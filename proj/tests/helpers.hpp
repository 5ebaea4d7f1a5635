#pragma once

#include <vector>

#include "regsched/core.hpp"
#include "regsched/gen.hpp"

namespace test_helpers {

using regsched::Instance;
using regsched::Job;
using regsched::Scenario;
using regsched::Schedule;

// Two-job example used throughout: J1 w=3 d in [1,1], J2 w=5 d in [1,2].
inline Instance e1() {
  Instance inst;
  inst.name = "e1";
  inst.jobs = {Job{1, 3, 1, 1}, Job{2, 5, 1, 2}};
  return inst;
}

inline Instance make_instance(std::vector<Job> jobs) {
  Instance inst;
  inst.name = "test";
  inst.jobs = std::move(jobs);
  return regsched::validate_and_normalize(inst);
}

// Small random instance; independent of the benchmark generator profiles.
inline Instance random_instance(regsched::SplitMix64& rng, int n,
                                int max_width = -1, int max_weight = 100) {
  std::vector<Job> jobs;
  for (int i = 0; i < n; ++i) {
    const int lo = rng.uniform(1, n);
    const int width = rng.uniform(0, max_width < 0 ? n : max_width);
    jobs.push_back(Job{i + 1, rng.uniform(1, max_weight), lo, lo + width});
  }
  return make_instance(std::move(jobs));
}

inline Schedule random_schedule(regsched::SplitMix64& rng,
                                const Instance& inst) {
  Schedule s;
  for (const Job& j : inst.jobs) s.order.push_back(j.id);
  for (int i = inst.size() - 1; i > 0; --i)
    std::swap(s.order[i], s.order[rng.uniform(0, i)]);
  return s;
}

}  // namespace test_helpers
