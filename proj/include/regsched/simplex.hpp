#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "regsched/core.hpp"
#include "regsched/model.hpp"

namespace regsched {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Optimal;
  double objective = 0.0;
  std::vector<double> values;  // structural variables, model order
  long iterations = 0;
};

// Shared numeric tolerances (all LP consumers reuse these).
inline constexpr double kPivotTol = 1e-9;
inline constexpr double kFeasTol = 1e-7;
inline constexpr double kOptTol = 1e-7;

namespace simplex_detail {

enum NbState : int8_t { kAtLower = 0, kAtUpper = 1 };

// Dense two-phase primal simplex for bounded variables.  The tableau holds
// B^{-1}A row-major; basic values and both phase cost rows are kept
// incrementally.  Dantzig pricing with a Bland fallback after a stall.
class Tableau {
 public:
  explicit Tableau(const LinearModel& model, bool relax) {
    const int nstruct = static_cast<int>(model.vars.size());
    const int m = static_cast<int>(model.cons.size());
    (void)relax;  // integrality flags are simply ignored here

    m_ = m;
    nstruct_ = nstruct;
    sign_ = model.maximize ? -1.0 : 1.0;

    lb_.resize(nstruct + m);
    ub_.resize(nstruct + m);
    cost_.assign(nstruct + m, 0.0);
    for (int j = 0; j < nstruct; ++j) {
      lb_[j] = model.vars[j].lb;
      ub_[j] = model.vars[j].ub;
      cost_[j] = sign_ * model.vars[j].obj;
    }
    for (int i = 0; i < m; ++i) {
      const int s = nstruct + i;
      switch (model.cons[i].sense) {
        case Sense::LE: lb_[s] = 0.0; ub_[s] = kInf; break;
        case Sense::GE: lb_[s] = -kInf; ub_[s] = 0.0; break;
        case Sense::EQ: lb_[s] = 0.0; ub_[s] = 0.0; break;
      }
    }

    // Initial nonbasic point: every column at its bound nearest zero.
    auto rest_value = [&](int j) {
      if (std::isfinite(lb_[j])) return lb_[j];
      if (std::isfinite(ub_[j])) return ub_[j];
      return 0.0;
    };

    // Residuals decide which rows need an artificial column.
    std::vector<double> resid(m);
    std::vector<int8_t> needs_art(m, 0);
    std::vector<double> slack_rest(m);
    int nart = 0;
    for (int i = 0; i < m; ++i) {
      double r = model.cons[i].rhs;
      for (const auto& [v, c] : model.cons[i].terms) r -= c * rest_value(v);
      const int s = nstruct + i;
      if (r >= lb_[s] - kFeasTol && r <= ub_[s] + kFeasTol) {
        resid[i] = std::clamp(r, lb_[s], ub_[s]);
      } else {
        needs_art[i] = 1;
        slack_rest[i] = (r > ub_[s]) ? ub_[s] : lb_[s];
        resid[i] = r - slack_rest[i];
        ++nart;
      }
    }

    ncols_ = nstruct + m + nart;
    tab_.assign(static_cast<size_t>(m) * ncols_, 0.0);
    lb_.resize(ncols_, 0.0);
    ub_.resize(ncols_, kInf);
    cost_.resize(ncols_, 0.0);
    state_.assign(ncols_, kAtLower);
    in_basis_.assign(ncols_, 0);
    basis_.resize(m);
    xb_.resize(m);
    d1_.assign(ncols_, 0.0);
    d2_ = cost_;

    int art = nstruct + m;
    for (int i = 0; i < m; ++i) {
      double* row = &tab_[static_cast<size_t>(i) * ncols_];
      const double flip = (needs_art[i] && resid[i] < 0.0) ? -1.0 : 1.0;
      for (const auto& [v, c] : model.cons[i].terms) row[v] += flip * c;
      row[nstruct + i] = flip;
      if (!needs_art[i]) {
        basis_[i] = nstruct + i;
        xb_[i] = resid[i];
      } else {
        row[art] = 1.0;
        d1_[art] = 1.0;
        basis_[i] = art++;
        xb_[i] = std::fabs(resid[i]);
        state_[nstruct + i] =
            (slack_rest[i] == ub_[nstruct + i] && std::isfinite(ub_[nstruct + i]))
                ? kAtUpper
                : kAtLower;
      }
      in_basis_[basis_[i]] = 1;
    }
    // Reduced phase-1 costs: subtract artificial basic rows.
    for (int i = 0; i < m; ++i) {
      if (basis_[i] >= nstruct + m) {
        const double* row = &tab_[static_cast<size_t>(i) * ncols_];
        for (int j = 0; j < ncols_; ++j) d1_[j] -= row[j];
      }
    }
    // Columns without a finite lower bound rest at their upper bound.
    for (int j = 0; j < ncols_; ++j) {
      if (in_basis_[j]) continue;
      if (j >= nstruct && j < nstruct + m && needs_art[j - nstruct]) continue;
      if (!std::isfinite(lb_[j]) && std::isfinite(ub_[j])) state_[j] = kAtUpper;
    }
    nart_ = nart;
  }

  LpResult solve(const LinearModel& model) {
    LpResult res;
    if (nart_ > 0) {
      if (!iterate(/*phase1=*/true, res)) throw NumericalFailure("phase 1");
      if (phase_objective(true) > 1e-7) {
        res.status = LpStatus::Infeasible;
        return res;
      }
      // Artificials are done; pin them to zero.
      for (int j = nstruct_ + m_; j < ncols_; ++j) {
        lb_[j] = 0.0;
        ub_[j] = 0.0;
      }
    }
    if (!iterate(/*phase1=*/false, res)) {
      res.status = LpStatus::Unbounded;
      return res;
    }
    res.status = LpStatus::Optimal;
    res.values = extract_values();
    double obj = model.obj_constant;
    for (int j = 0; j < nstruct_; ++j) obj += model.vars[j].obj * res.values[j];
    res.objective = obj;
    return res;
  }

 private:
  double nb_value(int j) const {
    if (state_[j] == kAtUpper) return ub_[j];
    return std::isfinite(lb_[j]) ? lb_[j] : 0.0;
  }

  double value_of(int j) const { return in_basis_[j] ? 0.0 : nb_value(j); }

  std::vector<double> extract_values() const {
    std::vector<double> v(nstruct_, 0.0);
    for (int j = 0; j < nstruct_; ++j)
      if (!in_basis_[j]) v[j] = nb_value(j);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < nstruct_) v[basis_[i]] = xb_[i];
    return v;
  }

  double phase_objective(bool phase1) const {
    const std::vector<double>& c = phase1 ? art_cost_view() : cost_;
    double obj = 0.0;
    for (int i = 0; i < m_; ++i) obj += c[basis_[i]] * xb_[i];
    for (int j = 0; j < ncols_; ++j)
      if (!in_basis_[j]) obj += c[j] * nb_value(j);
    return obj;
  }

  const std::vector<double>& art_cost_view() const {
    if (art_cost_.empty()) {
      art_cost_.assign(ncols_, 0.0);
      for (int j = nstruct_ + m_; j < ncols_; ++j) art_cost_[j] = 1.0;
    }
    return art_cost_;
  }

  // Returns false on unboundedness (phase 2 only).
  bool iterate(bool phase1, LpResult& res) {
    std::vector<double>& d = phase1 ? d1_ : d2_;
    const long stall_limit = 3L * (m_ + ncols_);
    long stall = 0;
    bool bland = false;
    double last_obj = phase_objective(phase1);
    const long max_iter = 200000L + 60L * (m_ + ncols_);

    for (long iter = 0;; ++iter) {
      if (iter > max_iter)
        throw NumericalFailure("simplex iteration limit exceeded");

      // Pricing.
      int enter = -1;
      double best = 0.0;
      for (int j = 0; j < ncols_; ++j) {
        if (in_basis_[j]) continue;
        if (ub_[j] - lb_[j] < kPivotTol && std::isfinite(lb_[j]) &&
            std::isfinite(ub_[j]))
          continue;  // fixed column
        const double dj = d[j];
        bool improving;
        if (state_[j] == kAtUpper)
          improving = dj > kOptTol;
        else if (!std::isfinite(lb_[j]))
          improving = std::fabs(dj) > kOptTol;  // free column
        else
          improving = dj < -kOptTol;
        if (!improving) continue;
        if (bland) { enter = j; break; }
        if (std::fabs(dj) > best) { best = std::fabs(dj); enter = j; }
      }
      if (enter < 0) return true;  // phase optimal

      const double s = (state_[enter] == kAtUpper ||
                        (std::isfinite(lb_[enter]) ? false : d[enter] > 0))
                           ? -1.0
                           : 1.0;

      // Direction column.
      std::vector<double> alpha(m_);
      for (int i = 0; i < m_; ++i)
        alpha[i] = tab_[static_cast<size_t>(i) * ncols_ + enter];

      // Ratio test.
      double limit = ub_[enter] - lb_[enter];  // may be inf
      int leave_row = -1;
      double leave_piv = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double delta = s * alpha[i];
        const int b = basis_[i];
        double cap;
        if (delta > kPivotTol) {
          if (!std::isfinite(lb_[b])) continue;
          cap = (xb_[i] - lb_[b]) / delta;
        } else if (delta < -kPivotTol) {
          if (!std::isfinite(ub_[b])) continue;
          cap = (ub_[b] - xb_[i]) / (-delta);
        } else {
          continue;
        }
        if (cap < -1e-11) cap = 0.0;
        const bool tighter = cap < limit - 1e-10;
        const bool tie = std::fabs(cap - limit) <= 1e-10;
        if (tighter || (tie && leave_row >= 0 &&
                        (bland ? basis_[i] < basis_[leave_row]
                               : std::fabs(alpha[i]) > std::fabs(leave_piv)))) {
          limit = cap;
          leave_row = i;
          leave_piv = alpha[i];
        } else if (tie && leave_row < 0) {
          limit = std::min(limit, cap);
          leave_row = i;
          leave_piv = alpha[i];
        }
      }

      if (!std::isfinite(limit)) {
        if (phase1) throw NumericalFailure("phase 1 unbounded");
        return false;
      }
      ++res.iterations;

      if (leave_row < 0) {
        // Bound flip: entering runs to its opposite bound.
        for (int i = 0; i < m_; ++i) xb_[i] -= s * limit * alpha[i];
        state_[enter] = (state_[enter] == kAtUpper) ? kAtLower : kAtUpper;
      } else {
        const int leave = basis_[leave_row];
        for (int i = 0; i < m_; ++i) xb_[i] -= s * limit * alpha[i];
        xb_[leave_row] = nb_value(enter) + s * limit;
        state_[leave] = (s * leave_piv > 0.0) ? kAtLower : kAtUpper;
        if (!std::isfinite(ub_[leave]) && state_[leave] == kAtUpper)
          state_[leave] = kAtLower;  // cannot rest at an infinite bound
        in_basis_[leave] = 0;
        in_basis_[enter] = 1;
        basis_[leave_row] = enter;
        pivot(leave_row, enter);
      }

      // Stall detection drives the Bland fallback.
      const double obj = phase_objective(phase1);
      if (obj < last_obj - 1e-9) {
        stall = 0;
        bland = false;
        last_obj = obj;
      } else if (++stall > stall_limit) {
        bland = true;
      }
    }
  }

  void pivot(int r, int enter) {
    double* prow = &tab_[static_cast<size_t>(r) * ncols_];
    const double piv = prow[enter];
    const double inv = 1.0 / piv;
    for (int j = 0; j < ncols_; ++j) prow[j] *= inv;
    prow[enter] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &tab_[static_cast<size_t>(i) * ncols_];
      const double f = row[enter];
      if (f == 0.0) continue;
      for (int j = 0; j < ncols_; ++j) row[j] -= f * prow[j];
      row[enter] = 0.0;
    }
    for (std::vector<double>* dp : {&d1_, &d2_}) {
      const double f = (*dp)[enter];
      if (f == 0.0) continue;
      double* row = dp->data();
      for (int j = 0; j < ncols_; ++j) row[j] -= f * prow[j];
      row[enter] = 0.0;
    }
  }

  int m_ = 0, nstruct_ = 0, ncols_ = 0, nart_ = 0;
  double sign_ = 1.0;
  std::vector<double> tab_;
  std::vector<double> lb_, ub_, cost_;
  std::vector<double> d1_, d2_;
  std::vector<double> xb_;
  std::vector<int> basis_;
  std::vector<int8_t> in_basis_;
  std::vector<int8_t> state_;
  mutable std::vector<double> art_cost_;
};

}  // namespace simplex_detail

inline LpResult solve_lp(const LinearModel& model, bool relax) {
  if (!relax) {
    for (const Variable& v : model.vars)
      if (v.integer)
        throw Error("solve_lp(relax=false) on a model with integer variables");
  }
  simplex_detail::Tableau t(model, relax);
  return t.solve(model);
}

// Nominal problem LP: maximize sum w_k xhat_k with prefix capacity rows over
// jobs sorted by nondecreasing due-date.
inline LinearModel build_nominal_lp(const std::vector<int>& dues,
                                    const std::vector<int>& weights) {
  const int n = static_cast<int>(dues.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return dues[a] != dues[b] ? dues[a] < dues[b]
                                                          : a < b; });
  LinearModel m;
  m.name = "nominal_lp";
  m.maximize = true;
  for (int k = 0; k < n; ++k)
    m.add_var("xhat_" + std::to_string(k + 1), 0.0, 1.0, false,
              static_cast<double>(weights[order[k]]));
  for (int k = 0; k < n; ++k) {
    std::vector<std::pair<int, double>> terms;
    for (int i = 0; i <= k; ++i) terms.emplace_back(i, 1.0);
    m.add_con("prefix_" + std::to_string(k + 1), std::move(terms), Sense::LE,
              static_cast<double>(dues[order[k]]));
  }
  return m;
}

// Its dual: minimize sum nu_k + sum d_j lam_j.
inline LinearModel build_nominal_dual(const std::vector<int>& dues,
                                      const std::vector<int>& weights) {
  const int n = static_cast<int>(dues.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return dues[a] != dues[b] ? dues[a] < dues[b]
                                                          : a < b; });
  LinearModel m;
  m.name = "nominal_dual";
  for (int k = 0; k < n; ++k)
    m.add_var("nu_" + std::to_string(k + 1), 0.0, kInf, false, 1.0);
  for (int j = 0; j < n; ++j)
    m.add_var("lam_" + std::to_string(j + 1), 0.0, kInf, false,
              static_cast<double>(dues[order[j]]));
  for (int k = 0; k < n; ++k) {
    std::vector<std::pair<int, double>> terms;
    terms.emplace_back(k, 1.0);
    for (int i = k; i < n; ++i) terms.emplace_back(n + i, 1.0);
    m.add_con("dual_" + std::to_string(k + 1), std::move(terms), Sense::GE,
              static_cast<double>(weights[order[k]]));
  }
  return m;
}

}  // namespace regsched
