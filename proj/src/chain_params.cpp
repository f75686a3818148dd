#include "symcat/chain_params.hpp"

#include <cmath>
#include <string>

#include "symcat/error.hpp"

namespace symcat {

ChainParams ChainParams::xy(int n_sites, double gamma, double h) {
  ChainParams p{Model::XY, n_sites, gamma, h};
  p.validate();
  return p;
}

ChainParams ChainParams::xxx(int n_sites) {
  ChainParams p{Model::XXX, n_sites, 0.0, 0.0};
  p.validate();
  return p;
}

void ChainParams::validate() const {
  // N = 2, 3: the periodic bond sum double-counts and conventions diverge.
  if (n_sites < 4) {
    throw InvalidArgument("n_sites must be >= 4, got " + std::to_string(n_sites));
  }
  if (model == Model::XY) {
    if (!std::isfinite(gamma) || gamma <= 0.0 || gamma > 1.0) {
      throw InvalidArgument("XY anisotropy gamma must lie in (0, 1], got " + std::to_string(gamma));
    }
    if (!std::isfinite(h) || h < 0.0) {
      throw InvalidArgument("transverse field h must be finite and >= 0, got " + std::to_string(h));
    }
  }
}

}  // namespace symcat
