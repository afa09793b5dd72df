#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace hardedge {

/// Library version string embedded in every report.
const char* version_string();

struct Criterion {
  std::string name;
  /// Key into ExperimentReport::statistics.
  std::string statistic;
  /// One of "<", "<=", ">", ">=".
  std::string comparator;
  double threshold = 0.0;
  bool pass = false;
};

/// Plot-ready table attached to a report; written as CSV by the cli.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct ExperimentReport {
  std::string name;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json params = nlohmann::json::object();
  std::map<std::string, double> statistics;
  std::vector<Criterion> criteria;
  std::vector<std::uint64_t> seeds;
  std::string tolerance_note = "tolerance: calibrated, not theoretical";
  std::map<std::string, Table> tables;

  void set(const std::string& key, double value) { statistics[key] = value; }

  /// Adds a criterion and evaluates it against the recorded statistic.
  /// DomainError if the statistic is missing or the comparator unknown.
  const Criterion& require(const std::string& name, const std::string& statistic,
                           const std::string& comparator, double threshold);

  bool passed() const;
  nlohmann::json to_json() const;
};

}  // namespace hardedge
