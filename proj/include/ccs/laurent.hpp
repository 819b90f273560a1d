#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ccs/errors.hpp"

namespace ccs {

using Coef = boost::multiprecision::cpp_int;
using ExpVec = std::vector<int32_t>;

// Shared, immutable variable list.  Polynomials over the same list share the
// pointer; equality of lists falls back to content comparison so that
// deserialized values interoperate.
using Vars = std::shared_ptr<const std::vector<std::string>>;

Vars make_vars(std::vector<std::string> names);
bool same_vars(const Vars& a, const Vars& b);

// Sparse multivariate Laurent polynomial with arbitrary-precision integer
// coefficients.  Terms are keyed by exponent vector in lexicographic order,
// which fixes the canonical serialization.  Invariants: no zero coefficient
// is stored; the zero polynomial has an empty term map.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(Vars vars) : vars_(std::move(vars)) {}

  static Laurent zero(Vars vars) { return Laurent(std::move(vars)); }
  static Laurent constant(Vars vars, Coef c);
  static Laurent one(Vars vars) { return constant(std::move(vars), 1); }
  static Laurent monomial(Vars vars, ExpVec e, Coef c);
  static Laurent variable(Vars vars, size_t idx, int32_t exp = 1);

  const Vars& vars() const { return vars_; }
  size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const std::map<ExpVec, Coef>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const ExpVec& e, const Coef& c);

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent pow(uint32_t k) const;

  // Exact division: returns r with (*this) == q * r, throws NonExactDivision
  // otherwise.  Leading-term elimination under the lex order with a
  // Newton-box guard, so failure is detected rather than looping.
  static Laurent divide_exact(const Laurent& p, const Laurent& q);

  // Exact evaluation over the integers.  Negative exponents require the
  // coordinate to be +-1 (the only units of Z); otherwise NonInvertible.
  Coef evaluate_z(const std::vector<Coef>& point) const;

  // Evaluation in F_p.  Negative exponents require a nonzero coordinate.
  uint32_t evaluate_mod(const std::vector<uint32_t>& point, uint32_t p) const;

  // Substitute 1 for the variables listed in `idx`, producing a polynomial
  // over `new_vars` (the remaining variables, in order).
  Laurent set_vars_to_one(const std::vector<size_t>& idx, Vars new_vars) const;

  // Push forward along a variable identification: old variable i maps to
  // new variable var_map[i]; exponents of merged variables add.
  Laurent rename_vars(const std::vector<size_t>& var_map, Vars new_vars) const;

  // Coordinatewise min/max of exponent vectors over all terms.
  ExpVec exponent_min() const;
  ExpVec exponent_max() const;

  // Canonical compact form, e.g. "2 y1 y2^3 - y3^-1 + 5".
  std::string str() const;
  // Canonical key for dedup maps: exponents and coefficients only.
  std::string key() const;

 private:
  void check_same_vars(const Laurent& o) const;

  Vars vars_;
  std::map<ExpVec, Coef> terms_;
};

}  // namespace ccs
