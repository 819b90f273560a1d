#include "ccs/alphabet.hpp"

#include <sstream>

namespace ccs {

AlphabetMonomial AlphabetMonomial::operator*(const AlphabetMonomial& o) const {
  AlphabetMonomial r = *this;
  if (o.y_exp.size() != y_exp.size()) throw InternalError("alphabet arity mismatch");
  for (size_t i = 0; i < y_exp.size(); ++i) r.y_exp[i] += o.y_exp[i];
  for (const auto& [g, e] : o.f_exp) r.mul_f(g, e);
  return r;
}

AlphabetMonomial AlphabetMonomial::pow(int32_t k) const {
  AlphabetMonomial r = *this;
  for (auto& e : r.y_exp) e *= k;
  if (k == 0) {
    r.f_exp.clear();
  } else {
    for (auto& [g, e] : r.f_exp) e *= k;
  }
  return r;
}

std::string AlphabetMonomial::str(const Vars& yvars) const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < y_exp.size(); ++i) {
    if (y_exp[i] == 0) continue;
    if (any) os << " ";
    any = true;
    os << (*yvars)[i];
    if (y_exp[i] != 1) os << "^" << y_exp[i];
  }
  for (const auto& [g, e] : f_exp) {
    if (any) os << " ";
    any = true;
    os << "F" << g.str();
    if (e != 1) os << "^" << e;
  }
  return any ? os.str() : "1";
}

ExpandedFraction expand(const AlphabetMonomial& m, const FTable& table, const Vars& yvars) {
  const size_t n = yvars->size();
  if (m.y_exp.size() != n) throw InternalError("expand: arity mismatch");
  ExpVec num_y(n, 0), den_y(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (m.y_exp[i] > 0) num_y[i] = m.y_exp[i];
    if (m.y_exp[i] < 0) den_y[i] = -m.y_exp[i];
  }
  Laurent num = Laurent::monomial(yvars, num_y, 1);
  Laurent den = Laurent::monomial(yvars, den_y, 1);
  for (const auto& [g, e] : m.f_exp) {
    auto it = table.find(g);
    if (it == table.end()) throw InternalError("expand: missing F table entry " + g.str());
    if (e > 0)
      num = num * it->second.pow(static_cast<uint32_t>(e));
    else
      den = den * it->second.pow(static_cast<uint32_t>(-e));
  }
  return {std::move(num), std::move(den)};
}

}  // namespace ccs
