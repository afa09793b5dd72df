#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hardedge/core/types.hpp"
#include "hardedge/experiments/report.hpp"

namespace hardedge::cli {

/// Header `t,x1,...,xN`, one row per saved time, 17 significant digits.
void write_trajectory(std::ostream& out, const Trajectory& traj);
void write_trajectory(const std::string& path, const Trajectory& traj);

/// Inverse of write_trajectory. Provenance fields are left at their defaults.
/// IoError on malformed input.
Trajectory read_trajectory(std::istream& in);
Trajectory read_trajectory(const std::string& path);

/// One configuration per row, columns `<prefix>1..<prefix>K`.
void write_samples(const std::string& path, const std::vector<OrderedConfig>& samples,
                   const std::string& prefix = "x");

void write_table(const std::string& path, const Table& table);

/// Rows `x,y,value` of the inverse Bessel kernel in row-major grid order.
/// DomainError unless the grid is positive and increasing; IoError on write failure.
void emit_kernel_table(double eta, const std::vector<double>& grid, std::ostream& out,
                       double scale);

}  // namespace hardedge::cli
