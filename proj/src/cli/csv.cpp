#include "hardedge/cli/csv.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "hardedge/core/errors.hpp"
#include "hardedge/equilibrium/bessel.hpp"

namespace hardedge::cli {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.precision(std::numeric_limits<double>::max_digits10);
  return out;
}

void finish(std::ostream& out, const std::string& what) {
  out.flush();
  if (!out) throw IoError("write failed: " + what);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double to_double(const std::string& cell, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw IoError("line " + std::to_string(line) + ": not a number: '" + cell + "'");
  }
}

}  // namespace

void write_trajectory(std::ostream& out, const Trajectory& traj) {
  traj.validate();
  const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << "t";
  for (std::size_t i = 1; i <= n; ++i) out << ",x" << i;
  out << "\n";
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    out << traj.times[s];
    for (double v : traj.states[s].values()) out << "," << v;
    out << "\n";
  }
  out.precision(old);
  finish(out, "trajectory");
}

void write_trajectory(const std::string& path, const Trajectory& traj) {
  auto out = open_out(path);
  write_trajectory(out, traj);
}

Trajectory read_trajectory(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty trajectory");
  const auto header = split(line);
  if (header.empty() || header[0] != "t") throw IoError("trajectory header must start with 't'");
  for (std::size_t i = 1; i < header.size(); ++i)
    if (header[i] != "x" + std::to_string(i))
      throw IoError("unexpected trajectory column '" + header[i] + "'");
  Trajectory traj;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size())
      throw IoError("line " + std::to_string(lineno) + ": expected " +
                    std::to_string(header.size()) + " columns");
    traj.times.push_back(to_double(cells[0], lineno));
    std::vector<double> xs;
    xs.reserve(cells.size() - 1);
    for (std::size_t i = 1; i < cells.size(); ++i) xs.push_back(to_double(cells[i], lineno));
    try {
      traj.states.emplace_back(std::move(xs));
    } catch (const DomainError& e) {
      throw IoError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  try {
    traj.validate();
  } catch (const DomainError& e) {
    throw IoError(std::string("invalid trajectory: ") + e.what());
  }
  return traj;
}

Trajectory read_trajectory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_trajectory(in);
}

void write_samples(const std::string& path, const std::vector<OrderedConfig>& samples,
                   const std::string& prefix) {
  auto out = open_out(path);
  const std::size_t k = samples.empty() ? 0 : samples.front().size();
  for (std::size_t i = 1; i <= k; ++i) out << (i > 1 ? "," : "") << prefix << i;
  out << "\n";
  for (const auto& s : samples) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i > 0 ? "," : "") << s[i];
    out << "\n";
  }
  finish(out, path);
}

void write_table(const std::string& path, const Table& table) {
  auto out = open_out(path);
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i > 0 ? "," : "") << table.columns[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i > 0 ? "," : "") << row[i];
    out << "\n";
  }
  finish(out, path);
}

void emit_kernel_table(double eta, const std::vector<double>& grid, std::ostream& out,
                       double scale) {
  const KernelGrid g = make_kernel_grid(eta, grid, scale);
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << "x,y,value\n";
  for (std::size_t i = 0; i < g.points.size(); ++i)
    for (std::size_t j = 0; j < g.points.size(); ++j)
      out << g.points[i] << "," << g.points[j] << "," << g.values(i, j) << "\n";
  out.precision(old);
  finish(out, "kernel table");
}

}  // namespace hardedge::cli
