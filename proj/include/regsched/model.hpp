#pragma once

#include <limits>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "regsched/errors.hpp"

namespace regsched {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { LE, EQ, GE };

struct Variable {
  std::string name;
  double lb = 0.0;
  double ub = kInf;
  bool integer = false;
  double obj = 0.0;
};

struct Constraint {
  std::string name;
  std::vector<std::pair<int, double>> terms;  // (variable index, coefficient)
  Sense sense = Sense::LE;
  double rhs = 0.0;
};

// An abstract linear model: minimize (or maximize) c'x + constant subject to
// linear rows and variable bounds, with optional integrality flags.
struct LinearModel {
  std::string name;
  bool maximize = false;
  double obj_constant = 0.0;
  std::vector<Variable> vars;
  std::vector<Constraint> cons;

  int add_var(std::string vname, double lb, double ub, bool integer,
              double obj) {
    if (!index_.emplace(vname, static_cast<int>(vars.size())).second)
      throw Error("duplicate variable name: " + vname);
    vars.push_back(Variable{std::move(vname), lb, ub, integer, obj});
    return static_cast<int>(vars.size()) - 1;
  }

  void add_con(std::string cname, std::vector<std::pair<int, double>> terms,
               Sense sense, double rhs) {
    for (const auto& [v, c] : terms)
      if (v < 0 || v >= static_cast<int>(vars.size()))
        throw Error("constraint " + cname + " references unknown variable");
    cons.push_back(Constraint{std::move(cname), std::move(terms), sense, rhs});
  }

  int var(const std::string& vname) const {
    auto it = index_.find(vname);
    if (it == index_.end()) throw Error("unknown variable name: " + vname);
    return it->second;
  }

  bool has_var(const std::string& vname) const {
    return index_.count(vname) != 0;
  }

 private:
  std::unordered_map<std::string, int> index_;
};

}  // namespace regsched
