#include "hardedge/experiments/brownian_sheet.hpp"

#include <bit>
#include <cmath>

#include "hardedge/core/errors.hpp"
#include "hardedge/core/random.hpp"

namespace hardedge {

BrownianSheet::BrownianSheet(std::uint64_t seed, double dt) : seed_(seed), dt_(dt) {
  if (!(dt > 0.0)) throw ParameterError("BrownianSheet: dt must be positive");
}

double BrownianSheet::increment(std::uint64_t i, std::uint64_t k, std::uint64_t node) const {
  if (node == 0) throw DomainError("BrownianSheet: node numbering starts at 1");
  if (node == 1) return std::sqrt(dt_) * keyed_normal(seed_, i, k, 1);
  const std::uint64_t parent = node >> 1;
  const double whole = increment(i, k, parent);
  const int level = std::bit_width(parent) - 1;
  const double h = dt_ / static_cast<double>(std::uint64_t{1} << level);
  const double bridge = 0.5 * std::sqrt(h) * keyed_normal(seed_, i, k, parent + 1);
  return (node & 1) ? 0.5 * whole - bridge : 0.5 * whole + bridge;
}

namespace {

void step_node(std::vector<double>& x, const SdeParams& params, const BrownianSheet& sheet,
               std::uint64_t k, std::uint64_t node, int depth, Integrator integrator,
               int max_depth, StepReport& rep, std::vector<double>& dw) {
  const std::size_t n = x.size();
  const double h = sheet.dt() / static_cast<double>(std::uint64_t{1} << depth);
  for (std::size_t i = 0; i < n; ++i) dw[i] = sheet.increment(i, k, node);
  std::vector<double> prop;
  bool ok = false;
  try {
    prop = integrator == Integrator::log ? log_euler_update(x, params, h, dw)
                                         : euler_update(x, params, h, dw);
    ok = step_admissible(x, prop, params);
  } catch (const CoincidentCoordinates&) {
    ok = false;
  }
  if (ok) {
    x = std::move(prop);
    ++rep.substeps;
    rep.accepted_dt = std::min(rep.accepted_dt, h);
    return;
  }
  ++rep.projections;
  if (depth + 1 > max_depth) throw StepFailure("step_on_sheet: bisection depth exceeded");
  step_node(x, params, sheet, k, 2 * node, depth + 1, integrator, max_depth, rep, dw);
  step_node(x, params, sheet, k, 2 * node + 1, depth + 1, integrator, max_depth, rep, dw);
}

}  // namespace

StepReport step_on_sheet(std::vector<double>& x, const SdeParams& params, const BrownianSheet& sheet,
                         std::uint64_t k, Integrator integrator, int max_depth) {
  if (max_depth > 62) throw ParameterError("step_on_sheet: max_depth must be at most 62");
  StepReport rep;
  rep.accepted_dt = sheet.dt();
  std::vector<double> dw(x.size());
  step_node(x, params, sheet, k, 1, 0, integrator, max_depth, rep, dw);
  return rep;
}

}  // namespace hardedge
