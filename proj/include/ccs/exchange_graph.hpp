#pragma once

#include "ccs/walk.hpp"

namespace ccs {

// Coefficient-free expansions (y -> 1) in variables x1..xn; distinct cluster
// variables have distinct shadows, so these act as identity keys.
std::map<Label, Laurent> bare_expansions(const ARWalkResult& walk);

// One exchange relation x_a x_b = M + M', with each side recorded as a
// monomial in cluster-variable labels plus frozen-row exponents.
struct ExchangeRelation {
  Label a, b;
  std::map<Label, int> m_vars, mp_vars;
  std::vector<int64_t> m_coeff, mp_coeff;  // length m
};

struct ExchangeGraphResult {
  std::vector<std::vector<Label>> clusters;        // sorted label sets, discovery order
  std::vector<std::pair<size_t, size_t>> edges;    // adjacent cluster indices
  std::vector<ExchangeRelation> relations;         // one per exchangeable pair
};

// BFS over seeds up to relabeling, carrying the given coefficient rows
// (m x n, possibly empty).  Relations are deduplicated by unordered variable
// pair; a second encounter with different content is an error.
ExchangeGraphResult exchange_graph(const ARWalkResult& walk, const Mat& coeff_rows,
                                   size_t max_seeds = (1u << 20));

}  // namespace ccs
