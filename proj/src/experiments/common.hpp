#pragma once

#include <string>
#include <vector>

#include "hardedge/core/types.hpp"
#include "hardedge/experiments/energy.hpp"
#include "hardedge/experiments/ensemble.hpp"
#include "hardedge/sde/eigen_sde.hpp"

namespace hardedge::detail {

// Stream tags; one per pipeline so no two pipelines share a stream.
enum Tag : std::uint64_t {
  kTagA = 0x10,
  kTagB = 0x20,
  kTagControl = 0x30,
  kTagSanity = 0x40,
  kTagReference = 0x50,
  kTagTest = 0x60,
  kTagStart = 0x70,
};

inline SdeParams plain_params(double eta, double dt) {
  SdeParams p;
  p.eta = eta;
  p.dt_max = dt;
  p.validate();
  return p;
}

inline std::string indexed(const std::string& base, std::size_t i) {
  return base + "_" + std::to_string(i);
}

inline std::vector<double> column(const std::vector<OrderedConfig>& v, std::size_t k) {
  std::vector<double> c(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) c[r] = v[r][k];
  return c;
}

}  // namespace hardedge::detail
