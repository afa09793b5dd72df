#include "hardedge/core/errors.hpp"
#include "hardedge/experiments/experiments.hpp"

namespace hardedge {

Integrator parse_integrator(const std::string& name) {
  if (name == "eigen") return Integrator::eigen;
  if (name == "log") return Integrator::log;
  throw ParameterError("unknown integrator '" + name + "' (expected eigen or log)");
}

std::string integrator_name(Integrator integrator) {
  return integrator == Integrator::log ? "log" : "eigen";
}

}  // namespace hardedge
