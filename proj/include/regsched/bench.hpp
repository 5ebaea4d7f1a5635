#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "regsched/bnb.hpp"
#include "regsched/gen.hpp"
#include "regsched/heuristics.hpp"
#include "regsched/regret.hpp"
#include "regsched/unit_weight.hpp"

namespace regsched {

// Relative integrality gap in percent.
inline double gap_pct(double ub, double lb) {
  if (ub <= 0) return 0.0;
  return (ub - lb) / ub * 100.0;
}

enum class Method { Exact, AlgoA, Lb, Mp, Decomp };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::AlgoA: return "algoA";
    case Method::Lb: return "lb";
    case Method::Mp: return "mp";
    case Method::Decomp: return "decomp";
  }
  return "?";
}

struct BenchRow {
  std::string profile;
  int n = 0;
  uint64_t seed = 0;
  Method method = Method::Exact;
  long long value = 0;  // recomputed max regret of the returned schedule
  double time_ms = 0.0;
  std::string status;
  std::string ub, lb, gap;  // empty for plain heuristics
};

struct BenchOptions {
  std::optional<double> time_limit;  // per exact solve
  double gap_tolerance = 0.0;
  int blocks = 4;
  double polish_budget = 0.0;
  bool unit_weights = false;
};

namespace bench_detail {

inline std::string fmt(double v, int prec = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << v;
  return os.str();
}

inline BenchRow run_one(const Instance& inst, GenKind kind, int n,
                        uint64_t seed, Method method,
                        const BenchOptions& opt) {
  BenchRow row;
  row.profile = to_string(kind);
  row.n = n;
  row.seed = seed;
  row.method = method;

  const auto t0 = std::chrono::steady_clock::now();
  Schedule sched;
  switch (method) {
    case Method::Exact: {
      BnbOptions bopt;
      bopt.time_limit = opt.time_limit;
      bopt.gap_tolerance = opt.gap_tolerance;
      BnbResult r = bnb_solve(inst, bopt);
      sched = r.incumbent;
      row.status = to_string(r.status);
      row.ub = std::to_string(r.ub);
      row.lb = fmt(r.lb);
      row.gap = fmt(r.gap_pct);
      row.value = max_regret(inst, sched).regret;
      if (row.value != r.ub)
        throw Error("bench: solver-reported ub disagrees with recomputed Z");
      break;
    }
    case Method::AlgoA: {
      if (!inst.unit_weights())
        throw MethodUnavailable("algoA requires unit weights");
      AlgoAResult r = solve_unit(inst);
      sched = r.schedule;
      row.status = "Optimal";
      row.value = max_regret(inst, sched).regret;
      if (row.value != r.regret)
        throw Error("bench: algoA-reported Z disagrees with recomputed Z");
      row.ub = std::to_string(row.value);
      row.lb = fmt(static_cast<double>(row.value));
      row.gap = fmt(0.0);
      break;
    }
    case Method::Lb:
      sched = lb_heuristic(inst);
      row.status = "Heuristic";
      row.value = max_regret(inst, sched).regret;
      break;
    case Method::Mp:
      sched = mp_heuristic(inst);
      row.status = "Heuristic";
      row.value = max_regret(inst, sched).regret;
      break;
    case Method::Decomp: {
      DecompOptions dopt;
      dopt.m = std::min(opt.blocks, inst.size());
      dopt.polish_budget = opt.polish_budget;
      dopt.seed = seed;
      sched = decomposition(inst, dopt);
      row.status = "Heuristic";
      row.value = max_regret(inst, sched).regret;
      break;
    }
  }
  row.time_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return row;
}

inline int worker_count() {
  if (const char* env = std::getenv("REGSCHED_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

}  // namespace bench_detail

// Runs every method on every (n, rep) instance and renders a CSV with one row
// per solve, followed by a per-(n, method) mean/stddev summary block.
inline std::string run_bench(GenKind kind, const std::vector<int>& sizes,
                             int reps, const std::vector<Method>& methods,
                             uint64_t base_seed, const BenchOptions& opt) {
  struct Task {
    int n;
    uint64_t seed;
  };
  std::vector<Task> tasks;
  for (int n : sizes)
    for (int r = 0; r < reps; ++r)
      tasks.push_back(Task{n, base_seed + static_cast<uint64_t>(r)});

  std::vector<std::vector<BenchRow>> results(tasks.size());
  std::atomic<size_t> cursor{0};
  auto work = [&] {
    while (true) {
      const size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) break;
      const Task& t = tasks[i];
      const Instance inst = generate(GenProfile{kind, t.n, t.seed},
                                     opt.unit_weights);
      long long exact_value = -1;
      for (Method m : methods) {
        results[i].push_back(
            bench_detail::run_one(inst, kind, t.n, t.seed, m, opt));
        const BenchRow& row = results[i].back();
        if (m == Method::Exact && row.status == "Optimal")
          exact_value = row.value;
        if (exact_value >= 0 && row.value < exact_value)
          throw Error("bench: heuristic beat a proven optimum");
      }
    }
  };
  const int nworkers =
      std::min<int>(bench_detail::worker_count(), static_cast<int>(tasks.size()));
  if (nworkers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nworkers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  std::ostringstream os;
  os << "profile,n,seed,method,value,time_ms,status,ub,lb,gap_pct\n";
  std::map<std::pair<int, std::string>, std::vector<long long>> groups;
  for (const auto& rows : results) {
    for (const BenchRow& row : rows) {
      os << row.profile << "," << row.n << "," << row.seed << ","
         << to_string(row.method) << "," << row.value << ","
         << bench_detail::fmt(row.time_ms, 3) << "," << row.status << ","
         << row.ub << "," << row.lb << "," << row.gap << "\n";
      groups[{row.n, to_string(row.method)}].push_back(row.value);
    }
  }
  os << "# summary: profile,n,method,mean,std\n";
  for (const auto& [key, values] : groups) {
    double mean = 0;
    for (long long v : values) mean += static_cast<double>(v);
    mean /= static_cast<double>(values.size());
    double var = 0;
    for (long long v : values) {
      const double d = static_cast<double>(v) - mean;
      var += d * d;
    }
    const double stdev =
        values.size() > 1 ? std::sqrt(var / (static_cast<double>(values.size()) - 1))
                          : 0.0;
    os << "# summary: " << to_string(kind) << "," << key.first << ","
       << key.second << "," << bench_detail::fmt(mean, 2) << ","
       << bench_detail::fmt(stdev, 2) << "\n";
  }
  return os.str();
}

}  // namespace regsched
