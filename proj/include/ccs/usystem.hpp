#pragma once

#include "ccs/compat.hpp"
#include "ccs/exchange_graph.hpp"
#include "ccs/polygon.hpp"

namespace ccs {

enum class Provenance { Primitive, Universal, Family, LocalDerived };

// Two-sided monomial relation  prod u^left + prod u^right = 1.
struct UEquation {
  std::map<Label, int> left, right;
  Provenance prov = Provenance::Primitive;

  // Unordered {left,right} comparison key.
  std::pair<std::map<Label, int>, std::map<Label, int>> key() const {
    return left <= right ? std::make_pair(left, right) : std::make_pair(right, left);
  }
  bool same_sides(const UEquation& o) const { return key() == o.key(); }
};

// R_gamma:  u_gamma + prod_omega u_omega^(omega||gamma) = 1, one per gamma.
std::vector<UEquation> primitive_equations(const CompatibilityTable& table);

// The rational function f_gamma(y) as a monomial in the {y_i, F_gamma}
// alphabet, with the y_j factor exactly when t = 0 and tau-wrapped indices.
AlphabetMonomial f_gamma(const Label& gamma, const ARWalkResult& walk);
std::map<Label, AlphabetMonomial> f_monomials(const ARWalkResult& walk);

struct VerifyCert {
  bool pass = false;
  size_t cleared_terms = 0;   // term count of the cleared identity
  std::string witness;        // offending monomial on failure
};

// Substitute u -> f, clear denominators in the alphabet, expand and compare.
VerifyCert verify_equation(const UEquation& eq, const std::map<Label, AlphabetMonomial>& f,
                           const ARWalkResult& walk);

struct UniversalData {
  Mat bottom_rows;     // r x n, indexed by canonical Pi order
  int sign = 0;        // accepted sign on the dual g-vectors (+1 or -1)
  std::vector<UEquation> equations;
};

// Extended u-equations from all exchange relations of the universal-
// coefficient cluster algebra; the bottom-row sign is self-calibrated against
// the primitive relations.
UniversalData extended_equations_universal(const ARWalkResult& walk, const ARWalkResult& dual,
                                           const CompatibilityTable& table);

// Closed-form families (types A, B, C, D, G2), mapped onto Pi through the
// polygon dictionaries.
std::vector<UEquation> extended_equations_family(const DynkinType& type,
                                                 const ARWalkResult& walk,
                                                 const CompatibilityTable& table);

// Local relation X_{tau gamma} X_gamma = prod (1 + X_neighbor)^{-a}, indices
// tau-wrapped; one per element of Pi.
struct XEquation {
  Label gamma;
  Label lhs_a, lhs_b;                         // tau gamma, gamma
  std::vector<std::pair<Label, int>> rhs;     // (neighbor label, exponent)
};

std::vector<XEquation> local_equations(const ARWalkResult& walk);

VerifyCert verify_local(const XEquation& eq, const std::map<Label, AlphabetMonomial>& f,
                        const CompatibilityTable& table, const ARWalkResult& walk);

// Render a u-equation with model names via the dictionary (tests, CLI).
std::string render_equation(const UEquation& eq, const CompatibilityTable& table,
                            const PolygonModel& model, const std::vector<size_t>& dict);

}  // namespace ccs
