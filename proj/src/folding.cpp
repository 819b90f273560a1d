#include "ccs/folding.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ccs/usystem.hpp"

namespace ccs {

std::vector<Label> FoldingMap::fiber(const Label& target) const {
  std::vector<Label> f;
  for (const auto& [s, t] : nu_pi)
    if (t == target) f.push_back(s);
  return f;
}

std::vector<int> FoldingMap::fiber_i(int target_node) const {
  std::vector<int> f;
  for (size_t i = 0; i < nu_i.size(); ++i)
    if (nu_i[i] == target_node) f.push_back(static_cast<int>(i));
  return f;
}

namespace {

std::vector<std::vector<int>> close_group(std::vector<std::vector<int>> gens, int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> elems{id};
  for (const auto& g : gens) elems.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(elems.begin(), elems.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) c[i] = a[b[i]];
        if (elems.insert(c).second) grew = true;
      }
  }
  return {elems.begin(), elems.end()};
}

struct FoldSpec {
  Orientation src_orientation;
  std::vector<std::vector<int>> gens;
  std::vector<int> nu_i;
};

FoldSpec fold_spec(const DynkinType& src, const DynkinType& dst) {
  const int n = src.rank;
  if (src == dst) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    return {default_orientation(src), {}, id};
  }
  if (src.series == Series::A && dst.series == Series::C && src.rank == 2 * dst.rank + 1) {
    // arrows toward the middle node; sigma reverses the path
    const int mid = dst.rank - 1;  // 0-based middle of 0..2m
    Orientation o;
    for (auto [i, j] : src.edges()) {
      if (j <= mid) o.arrows.emplace_back(i, j);
      else o.arrows.emplace_back(j, i);
    }
    std::vector<int> sigma(n), nu(n);
    for (int i = 0; i < n; ++i) sigma[i] = n - 1 - i;
    for (int i = 0; i < n; ++i) nu[i] = std::min(i, n - 1 - i);
    return {o, {sigma}, nu};
  }
  if (src.series == Series::D && dst.series == Series::B && src.rank == dst.rank + 1) {
    std::vector<int> swap_last(n), nu(n);
    std::iota(swap_last.begin(), swap_last.end(), 0);
    std::swap(swap_last[n - 2], swap_last[n - 1]);
    for (int i = 0; i < n; ++i) nu[i] = std::min(i, n - 2);
    return {default_orientation(src), {swap_last}, nu};
  }
  if (src.series == Series::D && src.rank == 4 && dst.series == Series::G) {
    // outer nodes 0,2,3 point at the center 1
    Orientation o;
    o.arrows = {{0, 1}, {2, 1}, {3, 1}};
    std::vector<int> rho = {2, 1, 3, 0};  // 3-cycle on the outer nodes
    std::vector<int> nu = {0, 1, 0, 0};
    return {o, {rho}, nu};
  }
  if (src.series == Series::E && src.rank == 6 && dst.series == Series::F) {
    Orientation o;
    o.arrows = {{0, 1}, {1, 2}, {3, 2}, {4, 3}, {2, 5}};
    std::vector<int> sigma = {4, 3, 2, 1, 0, 5};
    std::vector<int> nu = {0, 1, 2, 1, 0, 3};
    return {o, {sigma}, nu};
  }
  throw UnsupportedType("unsupported folding " + src.name() + " -> " + dst.name());
}

}  // namespace

FoldingMap build_folding(const DynkinType& src, const DynkinType& dst) {
  FoldSpec spec = fold_spec(src, dst);
  FoldingMap fm;
  fm.src = src;
  fm.dst = dst;
  fm.src_orientation = spec.src_orientation;
  fm.dst_orientation = default_orientation(dst);
  fm.nu_i = spec.nu_i;
  fm.group = close_group(spec.gens, src.rank);

  // the group must preserve the source orientation
  std::set<std::pair<int, int>> arrows(fm.src_orientation.arrows.begin(),
                                       fm.src_orientation.arrows.end());
  for (const auto& g : fm.group)
    for (auto [f, t] : arrows)
      if (!arrows.count({g[f], g[t]}))
        throw InternalError("folding group does not preserve the orientation");

  fm.src_walk = ar_walk(src, fm.src_orientation);
  fm.dst_walk = ar_walk(dst, fm.dst_orientation);

  // folded exchange matrix must reproduce the target one: row sums over
  // fibers against a fixed representative column.
  for (int i = 0; i < dst.rank; ++i)
    for (int j = 0; j < dst.rank; ++j) {
      std::vector<int> fi = fm.fiber_i(i), fj = fm.fiber_i(j);
      int64_t sum = 0;
      for (int ii : fi) sum += fm.src_walk.b0[ii][fj[0]];
      if (sum != fm.dst_walk.b0[i][j])
        throw InternalError("folded exchange matrix mismatch");
    }

  for (const auto& l : fm.src_walk.pi) {
    Label img{l.t, fm.nu_i[l.j]};
    if (l.t > fm.dst_walk.r[img.j])
      throw InternalError("folding: sweep depth mismatch between source and target");
    fm.nu_pi.emplace(l, img);
  }
  for (const auto& l : fm.dst_walk.pi)
    if (fm.fiber(l).empty()) throw InternalError("folding: empty fiber over " + l.str());
  return fm;
}

namespace {

UEquation push_equation(const UEquation& e, const FoldingMap& fm) {
  UEquation f;
  f.prov = e.prov;
  for (const auto& [l, x] : e.left) f.left[fm.nu_pi.at(l)] += x;
  for (const auto& [l, x] : e.right) f.right[fm.nu_pi.at(l)] += x;
  return f;
}

}  // namespace

FoldReport check_folding_identities(const FoldingMap& fm, int jobs) {
  FoldReport rep;
  CompatibilityTable src_table = build_compat_table(fm.src_walk, jobs);
  CompatibilityTable dst_table = build_compat_table(fm.dst_walk, jobs);

  {  // (1) Gamma-invariance of source compatibility degrees
    bool pass = true;
    std::string detail;
    for (const auto& g : fm.group) {
      for (const auto& a : fm.src_walk.pi)
        for (const auto& b : fm.src_walk.pi) {
          if (src_table(a, b) != src_table(fm.act(g, a), fm.act(g, b))) {
            pass = false;
            if (detail.empty()) detail = "at (" + a.str() + "," + b.str() + ")";
          }
        }
    }
    rep.items.push_back({"group-invariance", pass, detail});
  }

  {  // (2) (gamma||omega)_D = sum over the fiber of gamma, any fiber rep of omega
    bool pass = true;
    std::string detail;
    for (const auto& gamma : fm.dst_walk.pi)
      for (const auto& omega : fm.dst_walk.pi) {
        int want = dst_table(gamma, omega);
        for (const auto& om : fm.fiber(omega)) {
          int sum = 0;
          for (const auto& ga : fm.fiber(gamma)) sum += src_table(ga, om);
          if (sum != want) {
            pass = false;
            if (detail.empty())
              detail = "(" + gamma.str() + "||" + omega.str() + ") = " +
                       std::to_string(want) + " vs fiber sum " + std::to_string(sum);
          }
        }
      }
    rep.items.push_back({"degree-sum", pass, detail});
  }

  {  // (3) nu(F_gamma~) = F_{nu(gamma~)}
    bool pass = true;
    std::string detail;
    std::vector<size_t> vmap(fm.src.rank);
    for (int i = 0; i < fm.src.rank; ++i) vmap[i] = static_cast<size_t>(fm.nu_i[i]);
    for (const auto& l : fm.src_walk.pi) {
      Laurent pushed = fm.src_walk.records.at(l).f_poly.rename_vars(vmap, fm.dst_walk.yvars);
      if (pushed != fm.dst_walk.records.at(fm.nu_pi.at(l)).f_poly) {
        pass = false;
        if (detail.empty()) detail = "at " + l.str();
      }
    }
    rep.items.push_back({"f-polynomial-push", pass, detail});
  }

  {  // (4) g^vee via the normalized push-forward of source g-vectors
    bool pass = true;
    std::string detail;
    ARWalkResult dst_dual = dual_data(fm.dst, fm.dst_orientation);
    for (const auto& gamma : fm.dst_walk.pi) {
      std::vector<int64_t> sum(fm.src.rank, 0);
      for (const auto& ga : fm.fiber(gamma)) {
        const auto& g = fm.src_walk.records.at(ga).g;
        for (int i = 0; i < fm.src.rank; ++i) sum[i] += g[i];
      }
      const auto& gv = dst_dual.records.at(gamma).g;
      for (int i = 0; i < fm.dst.rank; ++i) {
        std::vector<int> fi = fm.fiber_i(i);
        int64_t s = 0;
        for (int ii : fi) s += sum[ii];
        if (s != gv[i] * static_cast<int64_t>(fi.size())) {
          pass = false;
          if (detail.empty()) detail = "at " + gamma.str();
        }
      }
    }
    rep.items.push_back({"dual-g-vectors", pass, detail});
  }

  {  // (5) images of source u-equations are the target u-equations
    bool pass = true;
    std::string detail;
    std::vector<UEquation> src_eqs = primitive_equations(src_table);
    std::vector<UEquation> dst_eqs = primitive_equations(dst_table);
    for (const auto& e : src_eqs) {
      UEquation img = push_equation(e, fm);
      bool found = false;
      for (const auto& d : dst_eqs)
        if (d.same_sides(img)) { found = true; break; }
      if (!found) {
        pass = false;
        if (detail.empty()) detail = "image of R_" + e.left.begin()->first.str() + " missing";
      }
    }
    // and every target equation is hit
    for (const auto& d : dst_eqs) {
      bool hit = false;
      for (const auto& e : src_eqs)
        if (push_equation(e, fm).same_sides(d)) { hit = true; break; }
      if (!hit) {
        pass = false;
        if (detail.empty()) detail = "target R_" + d.left.begin()->first.str() + " not an image";
      }
    }
    rep.items.push_back({"u-equation-images", pass, detail});
  }

  return rep;
}

}  // namespace ccs
