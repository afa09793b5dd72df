#include "hardedge/experiments/report.hpp"

#include <cmath>

#include "hardedge/core/errors.hpp"

#ifndef HARDEDGE_VERSION
#define HARDEDGE_VERSION "unknown"
#endif

namespace hardedge {

const char* version_string() { return HARDEDGE_VERSION; }

namespace {

nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

const Criterion& ExperimentReport::require(const std::string& name, const std::string& statistic,
                                           const std::string& comparator, double threshold) {
  const auto it = statistics.find(statistic);
  if (it == statistics.end())
    throw DomainError("report: criterion '" + name + "' refers to missing statistic '" + statistic + "'");
  const double v = it->second;
  bool pass;
  if (comparator == "<")
    pass = v < threshold;
  else if (comparator == "<=")
    pass = v <= threshold;
  else if (comparator == ">")
    pass = v > threshold;
  else if (comparator == ">=")
    pass = v >= threshold;
  else
    throw DomainError("report: unknown comparator '" + comparator + "'");
  criteria.push_back({name, statistic, comparator, threshold, pass});
  return criteria.back();
}

bool ExperimentReport::passed() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return !criteria.empty();
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["version"] = version_string();
  j["config"] = config;
  j["params"] = params;
  nlohmann::json stats = nlohmann::json::object();
  for (const auto& [k, v] : statistics) stats[k] = number(v);
  j["statistics"] = stats;
  nlohmann::json thresholds = nlohmann::json::object();
  nlohmann::json verdicts = nlohmann::json::object();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : criteria) {
    thresholds[c.name] = c.threshold;
    verdicts[c.name] = c.pass;
    list.push_back({{"name", c.name},
                    {"statistic", c.statistic},
                    {"value", number(statistics.at(c.statistic))},
                    {"comparator", c.comparator},
                    {"threshold", c.threshold},
                    {"pass", c.pass}});
  }
  j["thresholds"] = thresholds;
  j["verdicts"] = verdicts;
  j["criteria"] = list;
  j["seeds"] = seeds;
  j["note"] = tolerance_note;
  j["pass"] = passed();
  return j;
}

}  // namespace hardedge
