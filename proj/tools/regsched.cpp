// Command-line front end: instance generation, solving, regret evaluation,
// LP export and the benchmark harness.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "regsched/bench.hpp"
#include "regsched/bnb.hpp"
#include "regsched/gen.hpp"
#include "regsched/heuristics.hpp"
#include "regsched/io.hpp"
#include "regsched/mip.hpp"
#include "regsched/regret.hpp"
#include "regsched/unit_weight.hpp"

namespace {

using namespace regsched;

GenKind parse_profile(const std::string& s) {
  if (s == "half") return GenKind::HalfUncertain;
  if (s == "high") return GenKind::HighUncertainty;
  throw Error("unknown profile '" + s + "' (expected half|high)");
}

Method parse_method(const std::string& s) {
  if (s == "exact") return Method::Exact;
  if (s == "algoA") return Method::AlgoA;
  if (s == "lb") return Method::Lb;
  if (s == "mp") return Method::Mp;
  if (s == "decomp") return Method::Decomp;
  throw Error("unknown method '" + s + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Min-max regret scheduling of unit jobs with interval due-dates"};
  app.require_subcommand(1);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate benchmark instances");
  std::string gen_profile = "half", gen_out = ".";
  int gen_n = 10, gen_count = 1;
  uint64_t gen_seed = 1;
  bool gen_unit = false;
  gen_cmd->add_option("--profile", gen_profile, "half|high");
  gen_cmd->add_option("--n", gen_n, "number of jobs")->required();
  gen_cmd->add_option("--seed", gen_seed, "base seed");
  gen_cmd->add_option("--count", gen_count, "number of instances");
  gen_cmd->add_option("--out", gen_out, "output directory");
  gen_cmd->add_flag("--unit-weights", gen_unit, "all weights set to 1");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
  std::string solve_in, solve_method = "exact", solve_out, solve_sched_out,
              solve_warm;
  std::optional<double> solve_tl;
  double solve_gap = 0.0, solve_polish = 300.0;
  int solve_blocks = 4;
  solve_cmd->add_option("--input", solve_in, "instance JSON")->required();
  solve_cmd->add_option("--method", solve_method,
                        "exact|algoA|lb|mp|decomp");
  solve_cmd->add_option("--time-limit", solve_tl, "seconds");
  solve_cmd->add_option("--gap", solve_gap, "gap tolerance, percent");
  solve_cmd->add_option("--warm-start", solve_warm, "schedule JSON");
  solve_cmd->add_option("--blocks", solve_blocks, "decomp block count");
  solve_cmd->add_option("--polish", solve_polish, "decomp polish seconds");
  solve_cmd->add_option("--output", solve_out, "result JSON")->required();
  solve_cmd->add_option("--schedule-out", solve_sched_out,
                        "also write the schedule alone");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "max regret of a schedule");
  std::string eval_in, eval_sched;
  eval_cmd->add_option("--input", eval_in, "instance JSON")->required();
  eval_cmd->add_option("--schedule", eval_sched, "schedule JSON")->required();

  // export-lp
  auto* lp_cmd = app.add_subcommand("export-lp", "write the MIP in LP format");
  std::string lp_in, lp_out;
  lp_cmd->add_option("--input", lp_in, "instance JSON")->required();
  lp_cmd->add_option("--out", lp_out, "output .lp file")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "benchmark harness");
  std::string bench_profile = "half", bench_out;
  std::vector<int> bench_sizes;
  std::vector<std::string> bench_methods{"exact", "lb", "mp"};
  int bench_reps = 10, bench_blocks = 4;
  uint64_t bench_seed = 1;
  std::optional<double> bench_tl;
  double bench_polish = 0.0;
  bool bench_unit = false;
  bench_cmd->add_option("--profile", bench_profile, "half|high");
  bench_cmd->add_option("--sizes", bench_sizes, "job counts")->required();
  bench_cmd->add_option("--reps", bench_reps, "instances per size");
  bench_cmd->add_option("--methods", bench_methods, "subset of the solvers");
  bench_cmd->add_option("--seed", bench_seed, "base seed");
  bench_cmd->add_option("--time-limit", bench_tl, "per exact solve, seconds");
  bench_cmd->add_option("--blocks", bench_blocks, "decomp block count");
  bench_cmd->add_option("--polish", bench_polish, "decomp polish seconds");
  bench_cmd->add_flag("--unit-weights", bench_unit, "unit-weight instances");
  bench_cmd->add_option("--out", bench_out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are input errors (exit 2)
  }

  if (gen_cmd->parsed()) {
    const GenKind kind = parse_profile(gen_profile);
    for (int i = 0; i < gen_count; ++i) {
      const uint64_t seed = gen_seed + static_cast<uint64_t>(i);
      const Instance inst = generate(GenProfile{kind, gen_n, seed}, gen_unit);
      const std::string path = gen_out + "/" + gen_profile + "_n" +
                               std::to_string(gen_n) + "_s" +
                               std::to_string(seed) + ".json";
      write_file(path, serialize(inst));
      std::cout << path << "\n";
    }
    return 0;
  }

  if (solve_cmd->parsed()) {
    const Instance inst = validate_and_normalize(read_instance(solve_in));
    const Method method = parse_method(solve_method);
    nlohmann::ordered_json result;
    Schedule sched;
    switch (method) {
      case Method::Exact: {
        BnbOptions opt;
        opt.time_limit = solve_tl;
        opt.gap_tolerance = solve_gap;
        if (!solve_warm.empty()) opt.warm_start = read_schedule(solve_warm);
        BnbResult r = bnb_solve(inst, opt);
        sched = r.incumbent;
        result["status"] = to_string(r.status);
        result["ub"] = r.ub;
        result["lb"] = r.lb;
        result["gap_pct"] = r.gap_pct;
        result["nodes"] = r.nodes;
        result["time_s"] = r.wall_time;
        break;
      }
      case Method::AlgoA: {
        AlgoAResult r = solve_unit(inst);
        sched = r.schedule;
        result["status"] = "Optimal";
        break;
      }
      case Method::Lb:
        sched = lb_heuristic(inst);
        result["status"] = "Heuristic";
        break;
      case Method::Mp:
        sched = mp_heuristic(inst);
        result["status"] = "Heuristic";
        break;
      case Method::Decomp: {
        DecompOptions opt;
        opt.m = solve_blocks;
        opt.polish_budget = solve_polish;
        sched = decomposition(inst, opt);
        result["status"] = "Heuristic";
        break;
      }
    }
    result["value"] = max_regret(inst, sched).regret;
    result["schedule"] = to_json(sched);
    write_file(solve_out, result.dump(2) + "\n");
    if (!solve_sched_out.empty()) write_file(solve_sched_out, serialize(sched));
    return 0;
  }

  if (eval_cmd->parsed()) {
    const Instance inst = validate_and_normalize(read_instance(eval_in));
    const Schedule sched = read_schedule(eval_sched);
    const RegretReport rep = max_regret(inst, sched);
    nlohmann::ordered_json j;
    j["regret"] = rep.regret;
    j["f_pi"] = rep.f_pi;
    j["f_star"] = rep.f_star;
    j["worst_scenario"] = rep.worst_scenario.due;
    j["alternative"] = to_json(rep.alternative);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (lp_cmd->parsed()) {
    const Instance inst = validate_and_normalize(read_instance(lp_in));
    write_file(lp_out, export_lp(build_model(inst)));
    return 0;
  }

  if (bench_cmd->parsed()) {
    const GenKind kind = parse_profile(bench_profile);
    std::vector<Method> methods;
    for (const std::string& s : bench_methods) methods.push_back(parse_method(s));
    BenchOptions opt;
    opt.time_limit = bench_tl;
    opt.blocks = bench_blocks;
    opt.polish_budget = bench_polish;
    opt.unit_weights = bench_unit;
    const std::string csv =
        run_bench(kind, bench_sizes, bench_reps, methods, bench_seed, opt);
    if (bench_out.empty())
      std::cout << csv;
    else
      write_file(bench_out, csv);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const regsched::NumericalFailure& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 3;
  } catch (const regsched::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
