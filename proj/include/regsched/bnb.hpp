#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "regsched/core.hpp"
#include "regsched/nominal.hpp"
#include "regsched/regret.hpp"

namespace regsched {

struct BnbOptions {
  std::optional<double> time_limit;  // seconds
  double gap_tolerance = 0.0;        // percent; 0 = prove optimality
  std::optional<Schedule> warm_start;
  std::optional<long> node_limit;
};

enum class BnbStatus { Optimal, GapReached, TimeLimit, NodeLimit };

struct BnbResult {
  BnbStatus status = BnbStatus::Optimal;
  Schedule incumbent;
  long long ub = 0;
  double lb = 0.0;
  double gap_pct = 0.0;
  long nodes = 0;
  double wall_time = 0.0;
};

inline const char* to_string(BnbStatus s) {
  switch (s) {
    case BnbStatus::Optimal: return "Optimal";
    case BnbStatus::GapReached: return "GapReached";
    case BnbStatus::TimeLimit: return "TimeLimit";
    case BnbStatus::NodeLimit: return "NodeLimit";
  }
  return "?";
}

// The search exploits the closed form of the maximum regret.  For a schedule
// pi, every job starting before its d- is on time in pi's worst-case scenario
// (its due is then d+); every other job is late there, with worst-case due
// min(start, d+).  Writing E(pi) for the "early" jobs (start < d-) and A(pi)
// for the adversary's best on-time weight under those worst-case dues,
//
//   Z(pi) = A(pi) - w(E(pi)).
//
// A(pi) is a nominal problem, so the matroid greedy evaluates it exactly (it
// equals the nominal LP optimum by integrality).  The tree therefore branches
// in two stages:
//
//  * outer nodes decide membership of E job by job (heaviest first).  E must
//    be independent w.r.t. the d- dues.  The node bound relaxes every job
//    outside E_in to its smallest possible worst-case due (d- for late jobs,
//    unchanged d+ for members) and charges the largest weight any extension of
//    E_in could ever recover: bound = A_low - w(E_in) - ext(E_in).  Both terms
//    are matroid greedy runs, and the bound is monotone along the tree.
//  * once membership is fully decided, an inner depth-first search fills the
//    slots left to right.  A late job placed at slot t (d- <= t < d+) pins its
//    worst-case due to t; once t reaches a late job's d+ its due is d+ no
//    matter where it ends up, so the job leaves the decision set and only
//    fills space.  Members of E never influence A (their due is d+ already)
//    and are kept feasible by a latest-slot Hall condition.  Unplaced late
//    jobs are relaxed to due max(d-, t), which tightens as t grows, so the
//    node bound A(relaxed dues) - w(E) converges to the exact Z at the leaf.
namespace bnb_detail {

// Shared instance view plus the greedy evaluator for A.
struct Arrays {
  int n = 0;
  std::vector<int> lo, hi, w;
  std::vector<int> by_weight;  // job indices, heaviest first

  explicit Arrays(const Instance& inst) : n(inst.size()) {
    lo.reserve(n);
    hi.reserve(n);
    w.reserve(n);
    for (const Job& j : inst.jobs) {
      lo.push_back(j.due_lo);
      hi.push_back(j.due_hi);
      w.push_back(j.weight);
    }
    by_weight.resize(n);
    for (int i = 0; i < n; ++i) by_weight[i] = i;
    std::sort(by_weight.begin(), by_weight.end(), [&](int a, int b) {
      if (w[a] != w[b]) return w[a] > w[b];
      return a < b;
    });
  }

  // Max-weight independent set value under the given dues (matroid greedy).
  long long greedy_a(const std::vector<int>& dues) const {
    std::vector<int> cnt(n + 1, 0);
    long long a = 0;
    for (int idx : by_weight) {
      const int d = dues[idx];
      ++cnt[d];
      int pre = 0;
      bool feasible = true;
      for (int t = 1; t <= n; ++t) {
        pre += cnt[t];
        if (pre > t) { feasible = false; break; }
      }
      if (feasible) a += w[idx];
      else --cnt[d];
    }
    return a;
  }
};

struct OuterNode {
  long long bound = 0;
  int depth = 0;            // jobs by_weight[0..depth) have decided membership
  std::vector<char> in_e;   // only meaningful below depth
};

struct OuterOrder {
  bool operator()(const OuterNode& a, const OuterNode& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;  // min-heap on bound
    return a.depth < b.depth;                          // deeper first on ties
  }
};

// Inner exact search over one fully decided membership.
class MembershipSearch {
 public:
  MembershipSearch(const Arrays& ar, const std::vector<char>& in_e,
                   long long& ub, std::vector<int>& best_slot_job,
                   long& nodes, const std::function<bool()>& interrupted)
      : ar_(ar),
        in_e_(in_e),
        ub_(ub),
        best_(best_slot_job),
        nodes_(nodes),
        interrupted_(interrupted) {
    const int n = ar_.n;
    w_e_ = 0;
    due_.assign(n, 0);
    slot_job_.assign(n, -1);
    placed_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      if (in_e_[i]) {
        w_e_ += ar_.w[i];
        due_[i] = ar_.hi[i];
        members_by_lo_.push_back(i);
      } else {
        undecided_.push_back(i);
      }
    }
    std::sort(members_by_lo_.begin(), members_by_lo_.end(), [&](int a, int b) {
      if (ar_.lo[a] != ar_.lo[b]) return ar_.lo[a] < ar_.lo[b];
      return a < b;
    });
  }

  void run() { dfs(0); }

 private:
  // Members still unplaced must each get a free slot s in [t, d-).  With all
  // slots >= t free except those already taken, the latest-fit transversal
  // check below is exact.
  bool members_feasible(int t) const {
    int free_below = 0;
    for (int tau = t + 1; tau <= ar_.n; ++tau) {
      if (slot_job_[tau - 1] == -1) ++free_below;
      int need = 0;
      for (int idx : members_by_lo_)
        if (!placed_[idx] && ar_.lo[idx] <= tau) ++need;
      if (need > free_below) return false;
    }
    for (int idx : members_by_lo_)
      if (!placed_[idx] && ar_.lo[idx] <= t) return false;
    return true;
  }

  // All late dues are decided; place leftover members latest-feasible and pad
  // with resolved jobs, then score the complete schedule.
  void finish(int t) {
    std::vector<int> slots = slot_job_;
    std::vector<int> rem;
    for (int idx : members_by_lo_)
      if (!placed_[idx]) rem.push_back(idx);  // lo ascending
    int ei = static_cast<int>(rem.size()) - 1;
    for (int s = ar_.n - 1; s >= t && ei >= 0; --s) {
      if (slots[s] != -1) continue;
      if (ar_.lo[rem[ei]] > s) slots[s] = rem[ei--];
    }
    if (ei >= 0) return;  // some member cannot start before its d-
    std::size_t fi = 0;
    for (int s = t; s < ar_.n; ++s)
      if (slots[s] == -1) slots[s] = resolved_[fi++];
    const long long z = ar_.greedy_a(due_) - w_e_;
    if (z < ub_) {
      ub_ = z;
      best_ = slots;
    }
  }

  void dfs(int t) {
    ++nodes_;
    if (interrupted_()) return;

    // A late job whose d+ has been passed keeps due d+ wherever it lands; it
    // stops being a decision and becomes slot padding.
    std::vector<int> newly;
    for (std::size_t i = 0; i < undecided_.size();) {
      const int k = undecided_[i];
      if (ar_.hi[k] <= t) {
        due_[k] = ar_.hi[k];
        resolved_.push_back(k);
        newly.push_back(k);
        undecided_[i] = undecided_.back();
        undecided_.pop_back();
      } else {
        ++i;
      }
    }

    [&] {
      if (undecided_.empty()) { finish(t); return; }
      if (t >= ar_.n) return;
      if (!members_feasible(t)) return;

      // Relax every undecided late job to its smallest reachable due.
      for (int k : undecided_) due_[k] = std::max(ar_.lo[k], t);
      if (ar_.greedy_a(due_) - w_e_ >= ub_) return;

      // Candidates for slot t, heavy late jobs first: pinning a heavy job's
      // worst-case due low hurts the adversary the most.
      std::vector<int> eligible;
      for (int k : undecided_)
        if (ar_.lo[k] <= t) eligible.push_back(k);
      std::sort(eligible.begin(), eligible.end(), [&](int a, int b) {
        if (ar_.w[a] != ar_.w[b]) return ar_.w[a] > ar_.w[b];
        return a < b;
      });
      for (int k : eligible) {
        due_[k] = t;  // d- <= t < d+, so the worst-case due is exactly t
        placed_[k] = 1;
        slot_job_[t] = k;
        undecided_.erase(std::find(undecided_.begin(), undecided_.end(), k));
        dfs(t + 1);
        undecided_.push_back(k);
        placed_[k] = 0;
        slot_job_[t] = -1;
        if (interrupted_()) return;
      }

      // Spend the slot on padding (any resolved job; they are exchangeable).
      if (!resolved_.empty()) {
        const int k = resolved_.back();
        resolved_.pop_back();
        placed_[k] = 1;
        slot_job_[t] = k;
        dfs(t + 1);
        placed_[k] = 0;
        slot_job_[t] = -1;
        resolved_.push_back(k);
        if (interrupted_()) return;
      }

      // Or on the most urgent member; any schedule placing a different member
      // here can swap it with this one, so one candidate suffices.
      for (int idx : members_by_lo_) {
        if (placed_[idx] || ar_.lo[idx] <= t) continue;
        placed_[idx] = 1;
        slot_job_[t] = idx;
        dfs(t + 1);
        placed_[idx] = 0;
        slot_job_[t] = -1;
        break;
      }
    }();

    for (int k : newly) {
      resolved_.erase(std::find(resolved_.begin(), resolved_.end(), k));
      undecided_.push_back(k);
    }
  }

  const Arrays& ar_;
  const std::vector<char>& in_e_;
  long long& ub_;
  std::vector<int>& best_;
  long& nodes_;
  const std::function<bool()>& interrupted_;

  long long w_e_ = 0;
  std::vector<int> due_;
  std::vector<int> slot_job_;
  std::vector<char> placed_;
  std::vector<int> members_by_lo_;
  std::vector<int> undecided_;  // late, due still open
  std::vector<int> resolved_;   // late, due pinned to d+, not yet placed
};

}  // namespace bnb_detail

class BnbSolver {
 public:
  BnbResult solve(const Instance& inst, const BnbOptions& opt) {
    using namespace bnb_detail;
    if (!inst.normalized())
      throw UnnormalizedInstance("bnb requires a normalized instance");
    const int n = inst.size();
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                           t0)
          .count();
    };
    auto out_of_time = [&] {
      return opt.time_limit && elapsed() >= *opt.time_limit;
    };

    BnbResult res;
    if (opt.warm_start) {
      try {
        detail::start_slots(inst, *opt.warm_start);
      } catch (const MismatchedInstance& e) {
        throw InvalidWarmStart(e.what());
      }
      res.incumbent = *opt.warm_start;
    } else {
      // Lower-bound scenario solve; cheap and usually a strong start.
      Scenario lows;
      for (const Job& j : inst.jobs) lows.due.push_back(j.due_lo);
      res.incumbent = solve_nominal(inst, lows).schedule;
    }
    res.ub = max_regret(inst, res.incumbent).regret;

    const Arrays ar(inst);
    double lb = 0.0;

    auto finish = [&](BnbStatus status) {
      res.status = status;
      if (status == BnbStatus::Optimal) lb = static_cast<double>(res.ub);
      res.lb = std::min(lb, static_cast<double>(res.ub));
      res.gap_pct = (res.ub > 0)
                        ? (static_cast<double>(res.ub) - res.lb) /
                              static_cast<double>(res.ub) * 100.0
                        : 0.0;
      res.wall_time = elapsed();
      return res;
    };

    // Membership bound: see the overview above.  The same greedy run also
    // rejects memberships that are not independent w.r.t. d-.
    auto outer_bound = [&](const std::vector<char>& in_e, int depth,
                           long long& bound) {
      std::vector<int> dues(ar.lo);
      std::vector<int> cnt(n + 1, 0);
      long long w_in = 0;
      for (int d = 0; d < depth; ++d) {
        const int i = ar.by_weight[d];
        if (!in_e[i]) continue;
        dues[i] = ar.hi[i];
        w_in += ar.w[i];
        ++cnt[ar.lo[i]];
      }
      int pre = 0;
      for (int t = 1; t <= n; ++t) {
        pre += cnt[t];
        if (pre > t) return false;  // membership not independent
      }
      const long long a_low = ar.greedy_a(dues);
      long long ext = 0;  // best extension weight among the undecided jobs
      for (int d = depth; d < n; ++d) {
        const int i = ar.by_weight[d];
        ++cnt[ar.lo[i]];
        pre = 0;
        bool feasible = true;
        for (int t = 1; t <= n; ++t) {
          pre += cnt[t];
          if (pre > t) { feasible = false; break; }
        }
        if (feasible) ext += ar.w[i];
        else --cnt[ar.lo[i]];
      }
      bound = a_low - w_in - ext;
      return true;
    };

    bool hit_node_limit = false;
    auto interrupted = [&] {
      if (out_of_time()) return true;
      if (opt.node_limit && res.nodes >= *opt.node_limit) {
        hit_node_limit = true;
        return true;
      }
      return false;
    };
    const std::function<bool()> interrupted_fn = interrupted;

    std::priority_queue<OuterNode, std::vector<OuterNode>, OuterOrder> open;
    {
      OuterNode root{0, 0, std::vector<char>(n, 0)};
      if (outer_bound(root.in_e, 0, root.bound)) open.push(std::move(root));
    }

    std::vector<int> best_slot_job;
    while (!open.empty()) {
      if (out_of_time()) return finish(BnbStatus::TimeLimit);
      if (hit_node_limit ||
          (opt.node_limit && res.nodes >= *opt.node_limit))
        return finish(BnbStatus::NodeLimit);

      OuterNode node = open.top();
      open.pop();
      lb = std::max(lb, static_cast<double>(node.bound));
      if (node.bound >= res.ub) return finish(BnbStatus::Optimal);
      if (opt.gap_tolerance > 0.0 && res.ub > 0) {
        const double q = (static_cast<double>(res.ub) - lb) /
                         static_cast<double>(res.ub) * 100.0;
        if (q <= opt.gap_tolerance) return finish(BnbStatus::GapReached);
      }
      ++res.nodes;

      if (node.depth == n) {
        MembershipSearch(ar, node.in_e, res.ub, best_slot_job, res.nodes,
                         interrupted_fn)
            .run();
        if (!best_slot_job.empty()) {
          Schedule sched;
          sched.order.reserve(n);
          for (int s = 0; s < n; ++s)
            sched.order.push_back(inst.jobs[best_slot_job[s]].id);
          res.incumbent = sched;
        }
        continue;
      }

      const int i = ar.by_weight[node.depth];
      for (const char member : {char(0), char(1)}) {
        OuterNode child{0, node.depth + 1, node.in_e};
        child.in_e[i] = member;
        if (!outer_bound(child.in_e, child.depth, child.bound)) continue;
        if (child.bound < res.ub) open.push(std::move(child));
      }
    }
    return finish(BnbStatus::Optimal);
  }
};

inline BnbResult bnb_solve(const Instance& inst, const BnbOptions& opt = {}) {
  return BnbSolver().solve(inst, opt);
}

}  // namespace regsched
