#include "ccs/usystem.hpp"

#include <algorithm>
#include <sstream>

#include "ccs/folding.hpp"

namespace ccs {

namespace {

// Normalize an out-of-range sweep index: past the end of row j the walk
// continues at (0, j*), and before the start it wraps to (r_{j*}, j*).
Label normalize_label(int t, int j, const ARWalkResult& walk) {
  std::vector<int> star = walk.type.star();
  while (t < 0 || t > walk.r[j]) {
    if (t < 0) {
      j = star[j];
      t += walk.r[j] + 1;
    } else {
      t -= walk.r[j] + 1;
      j = star[j];
    }
  }
  return Label{t, j};
}

}  // namespace

std::vector<UEquation> primitive_equations(const CompatibilityTable& table) {
  std::vector<UEquation> out;
  for (size_t g = 0; g < table.pi.size(); ++g) {
    UEquation eq;
    eq.prov = Provenance::Primitive;
    eq.left[table.pi[g]] = 1;
    for (size_t w = 0; w < table.pi.size(); ++w)
      if (table.deg[w][g] != 0) eq.right[table.pi[w]] = table.deg[w][g];
    out.push_back(std::move(eq));
  }
  return out;
}

AlphabetMonomial f_gamma(const Label& gamma, const ARWalkResult& walk) {
  const int n = walk.type.rank;
  const Mat a = walk.type.cartan();
  AlphabetMonomial m = AlphabetMonomial::unit(n);
  const int t = gamma.t, j = gamma.j;
  for (int i = 0; i < n; ++i) {
    if (walk.b0[i][j] > 0)  // i -> j
      m.mul_f(normalize_label(t, i, walk), static_cast<int32_t>(-a[i][j]));
    if (walk.b0[j][i] > 0)  // j -> i
      m.mul_f(normalize_label(t - 1, i, walk), static_cast<int32_t>(-a[i][j]));
  }
  m.mul_f(normalize_label(t - 1, j, walk), -1);
  m.mul_f(gamma, -1);
  if (t == 0) m.mul_y(static_cast<size_t>(j), 1);
  return m;
}

std::map<Label, AlphabetMonomial> f_monomials(const ARWalkResult& walk) {
  std::map<Label, AlphabetMonomial> f;
  for (const auto& l : walk.pi) f.emplace(l, f_gamma(l, walk));
  return f;
}

namespace {

// Clear denominators of A + B = 1 in the alphabet: multiply through by the
// monomial M with exponents -min(A, B, 0).
struct ClearedIdentity {
  AlphabetMonomial a, b, m;
};

ClearedIdentity clear_denominators(const AlphabetMonomial& a, const AlphabetMonomial& b) {
  const size_t n = a.y_exp.size();
  AlphabetMonomial m = AlphabetMonomial::unit(n);
  for (size_t i = 0; i < n; ++i)
    m.y_exp[i] = -std::min({a.y_exp[i], b.y_exp[i], 0});
  std::set<Label> keys;
  for (const auto& [g, e] : a.f_exp) keys.insert(g);
  for (const auto& [g, e] : b.f_exp) keys.insert(g);
  for (const Label& g : keys) {
    auto ia = a.f_exp.find(g);
    auto ib = b.f_exp.find(g);
    int32_t ea = ia == a.f_exp.end() ? 0 : ia->second;
    int32_t eb = ib == b.f_exp.end() ? 0 : ib->second;
    m.mul_f(g, -std::min({ea, eb, 0}));
  }
  return {a * m, b * m, m};
}

std::string first_term_diff(const Laurent& lhs, const Laurent& rhs) {
  Laurent d = lhs - rhs;
  if (d.is_zero()) return "";
  const auto& [e, c] = *d.terms().begin();
  Laurent w = Laurent::monomial(lhs.vars(), e, c);
  return w.str();
}

}  // namespace

VerifyCert verify_equation(const UEquation& eq, const std::map<Label, AlphabetMonomial>& f,
                           const ARWalkResult& walk) {
  const int n = walk.type.rank;
  AlphabetMonomial a = AlphabetMonomial::unit(n), b = AlphabetMonomial::unit(n);
  for (const auto& [g, e] : eq.left) a = a * f.at(g).pow(e);
  for (const auto& [g, e] : eq.right) b = b * f.at(g).pow(e);
  ClearedIdentity ci = clear_denominators(a, b);
  FTable table = walk.f_table();
  Laurent pa = expand(ci.a, table, walk.yvars).num;
  Laurent pb = expand(ci.b, table, walk.yvars).num;
  Laurent pm = expand(ci.m, table, walk.yvars).num;
  VerifyCert cert;
  cert.cleared_terms = pa.term_count() + pb.term_count() + pm.term_count();
  Laurent lhs = pa + pb;
  cert.pass = (lhs == pm);
  if (!cert.pass) cert.witness = first_term_diff(lhs, pm);
  return cert;
}

UniversalData extended_equations_universal(const ARWalkResult& walk, const ARWalkResult& dual,
                                           const CompatibilityTable& table) {
  const int n = walk.type.rank;
  if (dual.pi != walk.pi)
    throw InternalError("dual walk labels do not match (universal rows)");

  std::vector<UEquation> prim = primitive_equations(table);
  auto contains_all_primitive = [&](const std::vector<UEquation>& eqs) {
    for (const auto& p : prim) {
      bool found = false;
      for (const auto& e : eqs)
        if (e.same_sides(p)) { found = true; break; }
      if (!found) return false;
    }
    return true;
  };

  for (int sign : {-1, +1}) {
    Mat rows;
    for (const auto& l : walk.pi) {
      const auto& gv = dual.records.at(l).g;
      std::vector<int64_t> row(n);
      for (int i = 0; i < n; ++i) row[i] = sign * gv[i];
      rows.push_back(std::move(row));
    }
    ExchangeGraphResult graph = exchange_graph(walk, rows);
    std::vector<UEquation> eqs;
    for (const auto& rel : graph.relations) {
      UEquation eq;
      eq.prov = Provenance::Universal;
      for (size_t r = 0; r < walk.pi.size(); ++r) {
        if (rel.m_coeff[r] != 0) eq.left[walk.pi[r]] = static_cast<int>(rel.m_coeff[r]);
        if (rel.mp_coeff[r] != 0) eq.right[walk.pi[r]] = static_cast<int>(rel.mp_coeff[r]);
      }
      bool dup = false;
      for (const auto& e : eqs)
        if (e.same_sides(eq)) { dup = true; break; }
      if (!dup) eqs.push_back(std::move(eq));
    }
    if (contains_all_primitive(eqs)) {
      return {std::move(rows), sign, std::move(eqs)};
    }
  }
  throw InternalError("universal coefficient rows failed primitive calibration for both signs");
}

namespace {

std::vector<UEquation> model_to_pi(const std::vector<ModelEquation>& eqs,
                                   const CompatibilityTable& table,
                                   const std::vector<size_t>& dict) {
  // dict: pi index -> model index; invert.
  std::vector<size_t> inv(dict.size());
  for (size_t i = 0; i < dict.size(); ++i) inv[dict[i]] = i;
  std::vector<UEquation> out;
  for (const auto& me : eqs) {
    UEquation eq;
    eq.prov = Provenance::Family;
    for (const auto& [o, e] : me.left) eq.left[table.pi[inv[o]]] += e;
    for (const auto& [o, e] : me.right) eq.right[table.pi[inv[o]]] += e;
    out.push_back(std::move(eq));
  }
  return out;
}

std::vector<UEquation> dedup_equations(std::vector<UEquation> eqs) {
  std::vector<UEquation> out;
  for (auto& e : eqs) {
    bool dup = false;
    for (const auto& o : out)
      if (o.same_sides(e)) { dup = true; break; }
    if (!dup) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<UEquation> extended_equations_family(const DynkinType& type,
                                                 const ARWalkResult& walk,
                                                 const CompatibilityTable& table) {
  switch (type.series) {
    case Series::A:
      return model_to_pi(family_A(type.rank), table,
                         find_dictionary(table, model_A(type.rank)));
    case Series::B:
      return model_to_pi(family_B(type.rank), table,
                         find_dictionary(table, model_BC(type.rank, true)));
    case Series::C:
      return model_to_pi(family_C(type.rank), table,
                         find_dictionary(table, model_BC(type.rank, false)));
    case Series::D:
      return model_to_pi(family_D(type.rank), table,
                         find_dictionary(table, model_D(type.rank)));
    case Series::G: {
      // Fold the D4 family through nu.
      FoldingMap fm = build_folding(DynkinType{Series::D, 4}, type);
      CompatibilityTable src_table = build_compat_table(fm.src_walk);
      std::vector<UEquation> src =
          model_to_pi(family_D(4), src_table, find_dictionary(src_table, model_D(4)));
      std::vector<UEquation> out;
      for (const auto& e : src) {
        UEquation f;
        f.prov = Provenance::Family;
        for (const auto& [l, x] : e.left) f.left[fm.nu_pi.at(l)] += x;
        for (const auto& [l, x] : e.right) f.right[fm.nu_pi.at(l)] += x;
        out.push_back(std::move(f));
      }
      return dedup_equations(std::move(out));
    }
    default:
      throw UnsupportedType("no closed-form family for " + type.name());
  }
  (void)walk;
}

std::vector<XEquation> local_equations(const ARWalkResult& walk) {
  const int n = walk.type.rank;
  const Mat a = walk.type.cartan();
  std::vector<XEquation> out;
  for (const auto& gamma : walk.pi) {
    XEquation xe;
    xe.gamma = gamma;
    xe.lhs_a = walk.tau.at(gamma);
    xe.lhs_b = gamma;
    for (int i = 0; i < n; ++i) {
      if (walk.b0[i][gamma.j] > 0)
        xe.rhs.emplace_back(normalize_label(gamma.t, i, walk), static_cast<int>(-a[i][gamma.j]));
      if (walk.b0[gamma.j][i] > 0)
        xe.rhs.emplace_back(normalize_label(gamma.t - 1, i, walk), static_cast<int>(-a[i][gamma.j]));
    }
    out.push_back(std::move(xe));
  }
  return out;
}

namespace {

// X_gamma = u/(1-u) at u = f_gamma: by the primitive relation the denominator
// is the incompatibility monomial, so X stays a monomial in the alphabet.
AlphabetMonomial x_monomial(const Label& gamma, const std::map<Label, AlphabetMonomial>& f,
                            const CompatibilityTable& table) {
  AlphabetMonomial x = f.at(gamma);
  size_t g = table.idx(gamma);
  for (size_t w = 0; w < table.pi.size(); ++w) {
    int e = table.deg[w][g];
    if (e != 0) x = x * f.at(table.pi[w]).pow(-e);
  }
  return x;
}

}  // namespace

VerifyCert verify_local(const XEquation& eq, const std::map<Label, AlphabetMonomial>& f,
                        const CompatibilityTable& table, const ARWalkResult& walk) {
  FTable ftable = walk.f_table();
  auto frac = [&](const Label& l) {
    return expand(x_monomial(l, f, table), ftable, walk.yvars);
  };
  ExpandedFraction la = frac(eq.lhs_a), lb = frac(eq.lhs_b);
  Laurent lnum = la.num * lb.num;
  Laurent lden = la.den * lb.den;
  Laurent rnum = Laurent::one(walk.yvars), rden = Laurent::one(walk.yvars);
  for (const auto& [nb, e] : eq.rhs) {
    ExpandedFraction xf = frac(nb);
    rnum = rnum * (xf.den + xf.num).pow(static_cast<uint32_t>(e));
    rden = rden * xf.den.pow(static_cast<uint32_t>(e));
  }
  Laurent lhs = lnum * rden, rhs = rnum * lden;
  VerifyCert cert;
  cert.cleared_terms = lhs.term_count() + rhs.term_count();
  cert.pass = (lhs == rhs);
  if (!cert.pass) cert.witness = first_term_diff(lhs, rhs);
  return cert;
}

std::string render_equation(const UEquation& eq, const CompatibilityTable& table,
                            const PolygonModel& model, const std::vector<size_t>& dict) {
  auto side = [&](const std::map<Label, int>& s) {
    // sort by model object index for a stable rendering
    std::map<size_t, int> by_obj;
    for (const auto& [l, e] : s) by_obj[dict[table.idx(l)]] += e;
    std::ostringstream os;
    bool first = true;
    if (by_obj.empty()) os << "1";
    for (const auto& [o, e] : by_obj) {
      if (!first) os << " ";
      first = false;
      os << model.names[o];
      if (e != 1) os << "^" << e;
    }
    return os.str();
  };
  std::string l = side(eq.left), r = side(eq.right);
  if (r < l) std::swap(l, r);
  return l + " + " + r + " = 1";
}

}  // namespace ccs
