#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "regsched/bnb.hpp"
#include "regsched/core.hpp"
#include "regsched/gen.hpp"
#include "regsched/nominal.hpp"

namespace regsched {

// Nominal solve on the all-lower-bounds scenario (min-max equivalent).
inline Schedule lb_heuristic(const Instance& inst) {
  Scenario s;
  for (const Job& j : inst.jobs) s.due.push_back(j.due_lo);
  return solve_nominal(inst, s).schedule;
}

// Nominal solve on the interval mid-point scenario (floored).
inline Schedule mp_heuristic(const Instance& inst) {
  Scenario s;
  for (const Job& j : inst.jobs) s.due.push_back((j.due_lo + j.due_hi) / 2);
  return solve_nominal(inst, s).schedule;
}

struct DecompOptions {
  int m = 2;                    // block count
  double polish_budget = 300;   // seconds for the warm-start MIP phase
  uint64_t seed = 0;
};

// MIP decomposition heuristic: partition into m blocks, solve each block
// exactly, merge by repeatedly taking the highest-weight block head, then
// polish the merged schedule as a warm start for the full MIP.
inline Schedule decomposition(const Instance& inst, const DecompOptions& opt) {
  const int n = inst.size();
  if (opt.m < 2 || opt.m > n)
    throw InvalidBlockCount("block count must satisfy 2 <= m <= n");

  // Partition without replacement: seeded shuffle, m-1 blocks of floor(n/m),
  // remainder in the last block.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SplitMix64 rng(opt.seed);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.uniform(0, i)]);

  const int block_size = n / opt.m;
  std::vector<std::vector<int>> blocks(opt.m);
  int pos = 0;
  for (int b = 0; b + 1 < opt.m; ++b)
    for (int i = 0; i < block_size; ++i) blocks[b].push_back(perm[pos++]);
  while (pos < n) blocks[opt.m - 1].push_back(perm[pos++]);

  // Exact per-block solves.
  std::vector<std::vector<int>> block_orders(opt.m);  // job ids, block-local
  for (int b = 0; b < opt.m; ++b) {
    Instance sub;
    sub.name = inst.name + "_block" + std::to_string(b);
    for (int idx : blocks[b]) sub.jobs.push_back(inst.jobs[idx]);
    sub = validate_and_normalize(sub);
    block_orders[b] = bnb_solve(sub).incumbent.order;
  }

  // Merge by block heads: highest weight wins, ties to the earliest block.
  Schedule merged;
  std::vector<size_t> head(opt.m, 0);
  for (int k = 0; k < n; ++k) {
    int best_block = -1;
    int best_weight = -1;
    for (int b = 0; b < opt.m; ++b) {
      if (head[b] >= block_orders[b].size()) continue;
      const int id = block_orders[b][head[b]];
      const int w = inst.jobs[inst.index_of(id)].weight;
      if (w > best_weight) {
        best_weight = w;
        best_block = b;
      }
    }
    merged.order.push_back(block_orders[best_block][head[best_block]++]);
  }

  if (opt.polish_budget <= 0) return merged;

  BnbOptions bopt;
  bopt.warm_start = merged;
  bopt.time_limit = opt.polish_budget;
  return bnb_solve(inst, bopt).incumbent;
}

}  // namespace regsched
