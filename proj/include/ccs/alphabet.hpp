#pragma once

#include <map>

#include "ccs/label.hpp"
#include "ccs/laurent.hpp"

namespace ccs {

// Laurent monomial in the mixed alphabet {y_1..y_n} u {F_gamma : gamma in Pi}.
// The F_gamma stay symbolic; identities are checked by clearing denominators
// against a table of F-polynomials, never by factorization.
struct AlphabetMonomial {
  ExpVec y_exp;                  // length n
  std::map<Label, int32_t> f_exp;

  static AlphabetMonomial unit(size_t n) { return {ExpVec(n, 0), {}}; }

  AlphabetMonomial& mul_y(size_t i, int32_t e) {
    y_exp[i] += e;
    return *this;
  }
  AlphabetMonomial& mul_f(const Label& g, int32_t e) {
    auto it = f_exp.find(g);
    if (it == f_exp.end()) {
      if (e != 0) f_exp.emplace(g, e);
    } else {
      it->second += e;
      if (it->second == 0) f_exp.erase(it);
    }
    return *this;
  }

  AlphabetMonomial operator*(const AlphabetMonomial& o) const;
  AlphabetMonomial pow(int32_t k) const;  // k may be negative
  AlphabetMonomial inverse() const { return pow(-1); }
  bool operator==(const AlphabetMonomial& o) const = default;

  std::string str(const Vars& yvars) const;
};

// Expansion of an alphabet monomial into a numerator/denominator pair of
// y-polynomials: negative alphabet exponents are cleared to the denominator.
// Since every F_gamma has constant term 1, the two sides share no monomial
// factor in y.
struct ExpandedFraction {
  Laurent num;
  Laurent den;
};

using FTable = std::map<Label, Laurent>;  // gamma -> F_gamma(y)

ExpandedFraction expand(const AlphabetMonomial& m, const FTable& table, const Vars& yvars);

}  // namespace ccs
