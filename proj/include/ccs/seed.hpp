#pragma once

#include <optional>

#include "ccs/exchange.hpp"
#include "ccs/label.hpp"

namespace ccs {

// Seed of the cluster algebra: extended matrix plus the cluster expansions as
// Laurent polynomials in the initial variables (x_1..x_n and the frozen
// variables, in that order).  `labels` tracks which element of Pi sits in
// each position once known.
struct Seed {
  ExchangeMatrix matrix;
  std::vector<Laurent> cluster;  // size n, over n+m variables
  std::vector<Label> labels;     // size n

  // Mutation in direction k: x_k x_k' = prod v_i^[B_ik]+ + prod v_i^[-B_ik]+
  // over all n+m rows, the new variable obtained by exact division.  The
  // label of position k is invalidated (caller assigns).
  Seed mutated(int k) const;
};

// Variable list "x1..xn, <frozen names>" for a principal or general seed.
Vars seed_vars(const DynkinType& type, const std::vector<std::string>& frozen_names);
std::vector<std::string> principal_frozen_names(int n);

// Initial seed with cluster x_1..x_n.
Seed initial_seed(ExchangeMatrix m, const std::vector<std::string>& frozen_names);

}  // namespace ccs
