#include "ccs/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ccs {

Vars make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const Vars& a, const Vars& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Laurent Laurent::constant(Vars vars, Coef c) {
  Laurent r(std::move(vars));
  if (c != 0) r.terms_.emplace(ExpVec(r.nvars(), 0), std::move(c));
  return r;
}

Laurent Laurent::monomial(Vars vars, ExpVec e, Coef c) {
  Laurent r(std::move(vars));
  if (e.size() != r.nvars()) throw InternalError("monomial: exponent length mismatch");
  if (c != 0) r.terms_.emplace(std::move(e), std::move(c));
  return r;
}

Laurent Laurent::variable(Vars vars, size_t idx, int32_t exp) {
  Laurent r(std::move(vars));
  if (idx >= r.nvars()) throw InternalError("variable index out of range");
  ExpVec e(r.nvars(), 0);
  e[idx] = exp;
  r.terms_.emplace(std::move(e), 1);
  return r;
}

bool Laurent::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return c == 1 && std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

void Laurent::add_term(const ExpVec& e, const Coef& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Laurent::check_same_vars(const Laurent& o) const {
  if (!same_vars(vars_, o.vars_))
    throw VariableMismatch("operands have different variable lists");
}

Laurent Laurent::operator-() const {
  Laurent r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  check_same_vars(o);
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent Laurent::operator-(const Laurent& o) const {
  check_same_vars(o);
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  check_same_vars(o);
  Laurent r(vars_);
  if (terms_.empty() || o.terms_.empty()) return r;
  ExpVec e(nvars());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  return same_vars(vars_, o.vars_) && terms_ == o.terms_;
}

Laurent Laurent::pow(uint32_t k) const {
  Laurent acc = one(vars_);
  Laurent base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = (k >>= 1) ? base * base : base;
  }
  return acc;
}

ExpVec Laurent::exponent_min() const {
  if (terms_.empty()) return ExpVec(nvars(), 0);
  ExpVec lo = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], e[i]);
  return lo;
}

ExpVec Laurent::exponent_max() const {
  if (terms_.empty()) return ExpVec(nvars(), 0);
  ExpVec hi = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < hi.size(); ++i) hi[i] = std::max(hi[i], e[i]);
  return hi;
}

Laurent Laurent::divide_exact(const Laurent& p, const Laurent& q) {
  if (q.is_zero()) throw NonExactDivision("division by zero polynomial");
  Laurent quot(p.vars_);
  if (p.is_zero()) return quot;
  p.check_same_vars(q);

  // Newton-box bound for the quotient: box(p) = box(r) + box(q) when the
  // division is exact, coordinatewise.
  const ExpVec plo = p.exponent_min(), phi = p.exponent_max();
  const ExpVec qlo = q.exponent_min(), qhi = q.exponent_max();
  const size_t n = p.nvars();
  ExpVec rlo(n), rhi(n);
  for (size_t i = 0; i < n; ++i) {
    rlo[i] = plo[i] - qlo[i];
    rhi[i] = phi[i] - qhi[i];
    if (rlo[i] > rhi[i]) throw NonExactDivision("quotient Newton box is empty");
  }

  Laurent rem = p;
  const auto& qlead = *q.terms_.rbegin();  // max term under lex order
  ExpVec te(n);
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    for (size_t i = 0; i < n; ++i) {
      te[i] = rlead.first[i] - qlead.first[i];
      if (te[i] < rlo[i] || te[i] > rhi[i])
        throw NonExactDivision("no exact quotient (term outside Newton box)");
    }
    Coef tc = rlead.second / qlead.second;
    if (tc * qlead.second != rlead.second)
      throw NonExactDivision("no exact quotient (coefficient not divisible)");
    quot.add_term(te, tc);
    // rem -= t * q
    ExpVec e(n);
    for (const auto& [eq, cq] : q.terms_) {
      for (size_t i = 0; i < n; ++i) e[i] = te[i] + eq[i];
      rem.add_term(e, -tc * cq);
    }
  }
  return quot;
}

namespace {

Coef pow_coef(const Coef& base, uint32_t k) {
  Coef acc = 1, b = base;
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t acc = 1;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return acc;
}

}  // namespace

Coef Laurent::evaluate_z(const std::vector<Coef>& point) const {
  if (point.size() != nvars()) throw InternalError("evaluate: point arity mismatch");
  Coef sum = 0;
  for (const auto& [e, c] : terms_) {
    Coef t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] > 0) {
        t *= pow_coef(point[i], static_cast<uint32_t>(e[i]));
      } else {
        if (point[i] != 1 && point[i] != -1)
          throw NonInvertible("negative exponent at non-unit integer coordinate");
        t *= pow_coef(point[i], static_cast<uint32_t>(-e[i]));  // (+-1)^k
      }
    }
    sum += t;
  }
  return sum;
}

uint32_t Laurent::evaluate_mod(const std::vector<uint32_t>& point, uint32_t p) const {
  if (point.size() != nvars()) throw InternalError("evaluate: point arity mismatch");
  uint64_t sum = 0;
  for (const auto& [e, c] : terms_) {
    uint64_t t = static_cast<uint64_t>(((c % p) + p) % p);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      uint64_t v = point[i] % p;
      if (e[i] > 0) {
        t = t * pow_mod(v, static_cast<uint64_t>(e[i]), p) % p;
      } else {
        if (v == 0) throw NonInvertible("negative exponent at zero coordinate");
        // v^(p-2) inverts v in F_p
        t = t * pow_mod(pow_mod(v, p - 2, p), static_cast<uint64_t>(-e[i]), p) % p;
      }
    }
    sum = (sum + t) % p;
  }
  return static_cast<uint32_t>(sum);
}

Laurent Laurent::set_vars_to_one(const std::vector<size_t>& idx, Vars new_vars) const {
  std::vector<bool> drop(nvars(), false);
  for (size_t i : idx) drop[i] = true;
  Laurent r(std::move(new_vars));
  ExpVec e(r.nvars());
  for (const auto& [ef, c] : terms_) {
    size_t k = 0;
    for (size_t i = 0; i < ef.size(); ++i)
      if (!drop[i]) e[k++] = ef[i];
    if (k != r.nvars()) throw InternalError("set_vars_to_one: arity mismatch");
    r.add_term(e, c);
  }
  return r;
}

Laurent Laurent::rename_vars(const std::vector<size_t>& var_map, Vars new_vars) const {
  if (var_map.size() != nvars()) throw InternalError("rename_vars: map arity mismatch");
  Laurent r(std::move(new_vars));
  ExpVec e(r.nvars());
  for (const auto& [ef, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (size_t i = 0; i < ef.size(); ++i) {
      if (var_map[i] >= e.size()) throw InternalError("rename_vars: target out of range");
      e[var_map[i]] += ef[i];
    }
    r.add_term(e, c);
  }
  return r;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coef a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1);
    bool any_var = false;
    std::ostringstream vs;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) vs << " ";
      any_var = true;
      vs << (*vars_)[i];
      if (e[i] != 1) vs << "^" << e[i];
    }
    if (!any_var) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << " ";
      os << vs.str();
    }
  }
  return os.str();
}

std::string Laurent::key() const {
  std::ostringstream os;
  for (const auto& [e, c] : terms_) {
    for (int32_t x : e) os << x << ",";
    os << ":" << c.str() << ";";
  }
  return os.str();
}

}  // namespace ccs
