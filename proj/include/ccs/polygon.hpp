#pragma once

#include <optional>

#include "ccs/compat.hpp"

namespace ccs {

// Combinatorial models for Pi in the classical types (diagonals and arcs of
// polygons) plus the G2 octagon labels.  These provide compatibility-degree
// oracles independent of the cluster engine, the label dictionaries used to
// render equations against the printed ones, and the closed-form extended
// u-equation families.
struct PolygonModel {
  std::vector<std::string> names;       // canonical object order
  std::vector<std::vector<int>> deg;    // deg[w][g] = (omega || gamma), model side
  std::vector<std::vector<size_t>> tau_candidates;  // candidate tau permutations
};

PolygonModel model_A(int rank);            // (rank+3)-gon diagonals
PolygonModel model_BC(int rank, bool is_b);  // 2(rank+1)-gon orbit classes
PolygonModel model_D(int rank);            // punctured rank-gon arcs and rays
PolygonModel model_G2();

PolygonModel polygon_model(const DynkinType& type);

// Bijection pi-index -> model-object index matching the two compatibility
// tables (and a model tau when candidates are given).  Deterministic: first
// solution in canonical search order.
std::vector<size_t> find_dictionary(const CompatibilityTable& table, const PolygonModel& model);

// Model-side crossing-rule oracle after the dictionary: the exponent of
// u_omega in R_gamma per the polygon combinatorics.
int polygon_oracle(const DynkinType& type, const Label& omega, const Label& gamma,
                   const CompatibilityTable& table);

// Two-sided monomial equation over model object indices.
struct ModelEquation {
  std::map<size_t, int> left, right;
};

// Closed-form extended u-equation families, model side.
std::vector<ModelEquation> family_A(int rank);
std::vector<ModelEquation> family_D(int rank);
// Folded families: type C from the 2n-gon, type B from the punctured polygon.
std::vector<ModelEquation> family_C(int rank);
std::vector<ModelEquation> family_B(int rank);

}  // namespace ccs
