#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "regsched/core.hpp"
#include "regsched/errors.hpp"

namespace regsched {

inline nlohmann::ordered_json to_json(const Instance& inst) {
  nlohmann::ordered_json j;
  j["name"] = inst.name;
  j["jobs"] = nlohmann::ordered_json::array();
  for (const Job& job : inst.jobs) {
    j["jobs"].push_back({{"id", job.id},
                         {"w", job.weight},
                         {"d_lo", job.due_lo},
                         {"d_hi", job.due_hi}});
  }
  return j;
}

inline nlohmann::ordered_json to_json(const Schedule& sched) {
  nlohmann::ordered_json j;
  j["order"] = sched.order;
  return j;
}

inline Instance instance_from_json(const nlohmann::json& j) {
  Instance inst;
  try {
    inst.name = j.at("name").get<std::string>();
    for (const auto& jj : j.at("jobs")) {
      Job job;
      job.id = jj.at("id").get<int>();
      job.weight = jj.at("w").get<int>();
      job.due_lo = jj.at("d_lo").get<int>();
      job.due_hi = jj.at("d_hi").get<int>();
      inst.jobs.push_back(job);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad instance file: ") + e.what());
  }
  return inst;
}

inline Schedule schedule_from_json(const nlohmann::json& j) {
  Schedule s;
  try {
    s.order = j.at("order").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad schedule file: ") + e.what());
  }
  return s;
}

inline std::string serialize(const Instance& inst) {
  return to_json(inst).dump(2) + "\n";
}

inline std::string serialize(const Schedule& sched) {
  return to_json(sched).dump(2) + "\n";
}

inline nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("cannot parse " + path + ": " + e.what());
  }
  return j;
}

inline Instance read_instance(const std::string& path) {
  return instance_from_json(parse_file(path));
}

inline Schedule read_schedule(const std::string& path) {
  return schedule_from_json(parse_file(path));
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace regsched
