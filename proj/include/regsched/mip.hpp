#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "regsched/core.hpp"
#include "regsched/model.hpp"

namespace regsched {

struct MipSolution {
  std::vector<double> values;  // model variable order
  double objective = 0.0;
};

namespace mip_detail {

inline std::string nm(const char* base, int a) {
  return std::string(base) + "_" + std::to_string(a);
}
inline std::string nm(const char* base, int a, int b) {
  return std::string(base) + "_" + std::to_string(a) + "_" + std::to_string(b);
}

}  // namespace mip_detail

// The min-max regret MIP.  Jobs are indexed k in 1..n (instance order), start
// slots t in 0..n-1, due values and dual thresholds j in 1..n.
//
// Variables per job k: x_k_t (start slot), del_k_d (worst-case due), y_k
// (late flag), D_k_j (cumulative due indicator), nu_k and z_k_j (dual block);
// lam_j is shared.  Objective: sum w_k y_k + sum nu_k + sum j lam_j - W.
inline LinearModel build_model(const Instance& inst) {
  if (!inst.normalized())
    throw UnnormalizedInstance("build_model requires dues clamped to n");
  using mip_detail::nm;
  const int n = inst.size();
  const double w_total = static_cast<double>(inst.total_weight());

  LinearModel m;
  m.name = inst.name.empty() ? "regret_mip" : inst.name;
  m.obj_constant = -w_total;

  for (int k = 1; k <= n; ++k)
    for (int t = 0; t < n; ++t) m.add_var(nm("x", k, t), 0, 1, true, 0);
  for (int k = 1; k <= n; ++k)
    for (int d = 1; d <= n; ++d) m.add_var(nm("del", k, d), 0, 1, true, 0);
  for (int k = 1; k <= n; ++k)
    m.add_var(nm("y", k), 0, 1, true, inst.jobs[k - 1].weight);
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= n; ++j) m.add_var(nm("D", k, j), 0, kInf, false, 0);
  for (int k = 1; k <= n; ++k) m.add_var(nm("nu", k), 0, kInf, false, 1);
  for (int j = 1; j <= n; ++j) m.add_var(nm("lam", j), 0, w_total, false, j);
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= n; ++j) m.add_var(nm("z", k, j), 0, kInf, false, 0);

  auto x = [&](int k, int t) { return (k - 1) * n + t; };
  auto del = [&](int k, int d) { return n * n + (k - 1) * n + (d - 1); };
  auto y = [&](int k) { return 2 * n * n + (k - 1); };
  auto D = [&](int k, int j) { return 2 * n * n + n + (k - 1) * n + (j - 1); };
  auto nu = [&](int k) { return 3 * n * n + n + (k - 1); };
  auto lam = [&](int j) { return 3 * n * n + 2 * n + (j - 1); };
  auto z = [&](int k, int j) { return 3 * n * n + 3 * n + (k - 1) * n + (j - 1); };

  // (a) each job takes one slot; (b) each slot takes one job.
  for (int k = 1; k <= n; ++k) {
    std::vector<std::pair<int, double>> terms;
    for (int t = 0; t < n; ++t) terms.emplace_back(x(k, t), 1.0);
    m.add_con(nm("assign_job", k), std::move(terms), Sense::EQ, 1.0);
  }
  for (int t = 0; t < n; ++t) {
    std::vector<std::pair<int, double>> terms;
    for (int k = 1; k <= n; ++k) terms.emplace_back(x(k, t), 1.0);
    m.add_con(nm("assign_slot", t), std::move(terms), Sense::EQ, 1.0);
  }
  // (c) each job has exactly one worst-case due value.
  for (int k = 1; k <= n; ++k) {
    std::vector<std::pair<int, double>> terms;
    for (int d = 1; d <= n; ++d) terms.emplace_back(del(k, d), 1.0);
    m.add_con(nm("due_choice", k), std::move(terms), Sense::EQ, 1.0);
  }
  // (d)/(e) worst-case due selection driven by the start slot.
  for (int k = 1; k <= n; ++k) {
    const int lo = inst.jobs[k - 1].due_lo;
    const int hi = inst.jobs[k - 1].due_hi;
    for (int t = 0; t < n; ++t) {
      const int target = (t < lo || t >= hi) ? hi : t;
      m.add_con(nm("wc_due", k, t),
                {{x(k, t), 1.0}, {del(k, target), -1.0}}, Sense::LE, 0.0);
    }
  }
  // (f) lateness: start - due + 1 <= n*y.
  for (int k = 1; k <= n; ++k) {
    std::vector<std::pair<int, double>> terms;
    for (int t = 1; t < n; ++t) terms.emplace_back(x(k, t), t);
    for (int d = 1; d <= n; ++d) terms.emplace_back(del(k, d), -d);
    terms.emplace_back(y(k), -static_cast<double>(n));
    m.add_con(nm("late", k), std::move(terms), Sense::LE, -1.0);
  }
  // (g) D_kj = sum_{d<=j} del_kd.
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= n; ++j) {
      std::vector<std::pair<int, double>> terms;
      terms.emplace_back(D(k, j), 1.0);
      for (int d = 1; d <= j; ++d) terms.emplace_back(del(k, d), -1.0);
      m.add_con(nm("cumdue", k, j), std::move(terms), Sense::EQ, 0.0);
    }
  }
  // (h) dual feasibility rows of the adversarial subproblem.
  for (int k = 1; k <= n; ++k) {
    std::vector<std::pair<int, double>> terms;
    terms.emplace_back(nu(k), 1.0);
    for (int j = 1; j <= n; ++j) terms.emplace_back(z(k, j), 1.0);
    m.add_con(nm("dual", k), std::move(terms), Sense::GE,
              static_cast<double>(inst.jobs[k - 1].weight));
  }
  // (i)-(k) linearization of z_kj = D_kj * lam_j with big-M = W.
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= n; ++j) {
      m.add_con(nm("zcap", k, j), {{z(k, j), 1.0}, {D(k, j), -w_total}},
                Sense::LE, 0.0);
      m.add_con(nm("zlink", k, j),
                {{lam(j), 1.0}, {D(k, j), w_total}, {z(k, j), -1.0}},
                Sense::LE, w_total);
      m.add_con(nm("zlam", k, j), {{z(k, j), 1.0}, {lam(j), -1.0}}, Sense::LE,
                0.0);
    }
  }
  return m;
}

// Decode the permutation encoded by the x block.
inline Schedule extract_schedule(const LinearModel& model,
                                 const MipSolution& sol,
                                 const Instance& inst) {
  const int n = inst.size();
  Schedule sched;
  sched.order.assign(n, 0);
  std::vector<char> taken(n, 0);
  for (int k = 1; k <= n; ++k) {
    int slot = -1;
    for (int t = 0; t < n; ++t) {
      const double v = sol.values[model.var(mip_detail::nm("x", k, t))];
      if (std::fabs(v - 1.0) <= 1e-6) {
        slot = t;
      } else if (std::fabs(v) > 1e-6) {
        throw FractionalSolution("x_" + std::to_string(k) + "_" +
                                 std::to_string(t) + " is fractional");
      }
    }
    if (slot < 0 || taken[slot])
      throw FractionalSolution("x block does not encode a permutation");
    taken[slot] = 1;
    sched.order[slot] = inst.jobs[k - 1].id;
  }
  return sched;
}

namespace mip_detail {

inline std::string fmt_coeff(double c) {
  std::ostringstream os;
  if (c == std::floor(c) && std::fabs(c) < 1e15)
    os << static_cast<long long>(c);
  else
    os << c;
  return os.str();
}

inline void append_terms(std::ostringstream& os,
                         const std::vector<std::pair<int, double>>& terms,
                         const std::vector<Variable>& vars) {
  bool first = true;
  for (const auto& [v, c] : terms) {
    if (c == 0.0) continue;
    if (first) {
      if (c < 0) os << "- ";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const double a = std::fabs(c);
    if (a != 1.0) os << fmt_coeff(a) << " ";
    os << vars[v].name;
  }
  if (first) os << "0 " << vars[0].name;
}

}  // namespace mip_detail

// Deterministic CPLEX-LP-format text.  The objective constant is carried by
// a fixed auxiliary variable "one" with bounds [1,1].
inline std::string export_lp(const LinearModel& model) {
  using mip_detail::fmt_coeff;
  std::ostringstream os;
  os << "\\ " << (model.name.empty() ? "model" : model.name) << "\n";
  os << (model.maximize ? "Maximize\n" : "Minimize\n");
  std::vector<std::pair<int, double>> obj_terms;
  for (int j = 0; j < static_cast<int>(model.vars.size()); ++j)
    if (model.vars[j].obj != 0.0) obj_terms.emplace_back(j, model.vars[j].obj);
  os << " obj: ";
  mip_detail::append_terms(os, obj_terms, model.vars);
  if (model.obj_constant != 0.0) {
    os << (model.obj_constant < 0 ? " - " : " + ");
    const double a = std::fabs(model.obj_constant);
    if (a != 1.0) os << fmt_coeff(a) << " ";
    os << "one";
  }
  os << "\n";
  os << "Subject To\n";
  for (const Constraint& c : model.cons) {
    os << " " << c.name << ": ";
    mip_detail::append_terms(os, c.terms, model.vars);
    switch (c.sense) {
      case Sense::LE: os << " <= "; break;
      case Sense::EQ: os << " = "; break;
      case Sense::GE: os << " >= "; break;
    }
    os << fmt_coeff(c.rhs) << "\n";
  }
  os << "Bounds\n";
  for (const Variable& v : model.vars) {
    if (v.integer && v.lb == 0.0 && v.ub == 1.0) continue;  // listed below
    if (v.lb == 0.0 && v.ub == kInf) continue;              // LP default
    if (v.lb == v.ub) {
      os << " " << v.name << " = " << fmt_coeff(v.lb) << "\n";
    } else {
      os << " " << fmt_coeff(v.lb) << " <= " << v.name;
      if (std::isfinite(v.ub)) os << " <= " << fmt_coeff(v.ub);
      os << "\n";
    }
  }
  if (model.obj_constant != 0.0) os << " one = 1\n";
  bool any_bin = false;
  for (const Variable& v : model.vars)
    if (v.integer && v.lb == 0.0 && v.ub == 1.0) any_bin = true;
  if (any_bin) {
    os << "Binaries\n";
    int col = 0;
    for (const Variable& v : model.vars) {
      if (!(v.integer && v.lb == 0.0 && v.ub == 1.0)) continue;
      os << " " << v.name;
      if (++col % 8 == 0) os << "\n";
    }
    if (col % 8 != 0) os << "\n";
  }
  os << "End\n";
  return os.str();
}

}  // namespace regsched
