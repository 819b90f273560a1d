#pragma once

#include "ccs/walk.hpp"

namespace ccs {

// Full table of compatibility degrees (omega || gamma) over Pi x Pi.
// (omega || gamma) is the exponent of u_omega in the primitive relation
// R_gamma; it is computed as the positive denominator exponent of the
// omega-coordinate when x_gamma is expanded in a cluster containing omega.
struct CompatibilityTable {
  std::vector<Label> pi;
  std::vector<std::vector<int>> deg;  // deg[w][g] = (pi[w] || pi[g])

  int operator()(const Label& omega, const Label& gamma) const {
    return deg[idx(omega)][idx(gamma)];
  }
  size_t idx(const Label& l) const;
};

CompatibilityTable build_compat_table(const ARWalkResult& walk, int jobs = 1);

int compatibility_degree(const Label& omega, const Label& gamma, const ARWalkResult& walk);

struct StratumDescriptor {
  Label gamma;
  std::vector<Label> compatible_set;  // Pi(gamma)
  std::vector<DynkinType> factors;    // components of D minus vertex j
};

StratumDescriptor stratum(const Label& gamma, const ARWalkResult& walk,
                          const CompatibilityTable& table);

}  // namespace ccs
