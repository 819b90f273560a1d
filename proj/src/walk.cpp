#include "ccs/walk.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ccs {

namespace {

std::vector<int64_t> grading_degree(const Laurent& p, const Mat& b0) {
  // deg(x_i) = e_i, deg(y_j) = -B e_j (column j of -B); every term of a
  // cluster variable must share the degree.
  const int n = static_cast<int>(b0.size());
  std::vector<int64_t> g;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::vector<int64_t> d(n, 0);
    for (int i = 0; i < n; ++i) d[i] += e[i];
    for (int j = 0; j < n; ++j) {
      int64_t ye = e[n + j];
      if (ye == 0) continue;
      for (int i = 0; i < n; ++i) d[i] -= b0[i][j] * ye;
    }
    if (first) {
      g = std::move(d);
      first = false;
    } else if (g != d) {
      throw NonHomogeneous("cluster variable expansion is not homogeneous");
    }
  }
  if (first) throw NonHomogeneous("zero polynomial has no degree");
  return g;
}

}  // namespace

size_t ARWalkResult::index(const Label& l) const {
  auto it = std::lower_bound(pi.begin(), pi.end(), l);
  if (it == pi.end() || *it != l) throw InternalError("label not in Pi: " + l.str());
  return static_cast<size_t>(it - pi.begin());
}

int ARWalkResult::tau_order() const {
  int order = 1;
  std::vector<size_t> perm(pi.size());
  for (size_t i = 0; i < pi.size(); ++i) perm[i] = index(tau.at(pi[i]));
  std::vector<size_t> cur(perm);
  auto is_id = [&](const std::vector<size_t>& p) {
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] != i) return false;
    return true;
  };
  while (!is_id(cur)) {
    std::vector<size_t> nxt(cur.size());
    for (size_t i = 0; i < cur.size(); ++i) nxt[i] = perm[cur[i]];
    cur = std::move(nxt);
    ++order;
    if (order > 4 * (type.coxeter_number() + 2))
      throw InternalError("tau order out of range");
  }
  return order;
}

FTable ARWalkResult::f_table() const {
  FTable t;
  for (const auto& [l, rec] : records) t.emplace(l, rec.f_poly);
  return t;
}

std::vector<ExpVec> ARWalkResult::newton(const Label& g) const {
  std::vector<ExpVec> pts;
  const auto& f = records.at(g).f_poly;
  for (const auto& [e, c] : f.terms()) pts.push_back(e);
  return pts;
}

ARWalkResult ar_walk_on(const DynkinType& type, const Orientation& orientation, const Mat& b) {
  const int n = type.rank;
  ExchangeMatrix em{b, {}, type, orientation};
  em.coeff.assign(n, std::vector<int64_t>(n, 0));
  for (int i = 0; i < n; ++i) em.coeff[i][i] = 1;

  Seed seed = initial_seed(em, principal_frozen_names(n));

  std::vector<std::string> ynames = principal_frozen_names(n);
  Vars yvars = make_vars(ynames);
  std::vector<size_t> xidx(n);
  std::iota(xidx.begin(), xidx.end(), size_t{0});

  ARWalkResult res;
  res.type = type;
  res.orientation = orientation;
  res.b0 = b;
  res.yvars = yvars;

  std::map<std::string, Label> seen;  // expansion key -> label
  auto record = [&](const Label& l, const Laurent& expansion) {
    ClusterVariableRecord rec;
    rec.label = l;
    rec.expansion = expansion;
    rec.f_poly = expansion.set_vars_to_one(xidx, yvars);
    rec.g = grading_degree(expansion, b);
    seen.emplace(expansion.key(), l);
    res.records.emplace(l, std::move(rec));
  };
  for (int i = 0; i < n; ++i) record(Label{0, i}, seed.cluster[i]);

  auto snapshot = [&](const Seed& s) {
    res.snapshots.push_back({s.matrix.b, s.labels});
    std::vector<Label> c = s.labels;
    std::sort(c.begin(), c.end());
    if (std::find(res.clusters.begin(), res.clusters.end(), c) == res.clusters.end())
      res.clusters.push_back(std::move(c));
  };
  snapshot(seed);

  // wrap[j] = initial label reproduced when vertex j runs past r_j.
  std::vector<std::optional<Label>> wrap(n);
  std::vector<int> r(n, 0);
  const int max_sweeps = type.coxeter_number() + 2;
  int sweep = 0;
  while (true) {
    ++sweep;
    if (sweep > max_sweeps)
      throw InternalError("AR walk failed to close within h+2 sweeps");
    bool any_new = false;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
      // smallest-index unmutated source of the current quiver
      int src = -1;
      for (int i = 0; i < n && src < 0; ++i) {
        if (done[i]) continue;
        bool incoming = false;
        for (int j = 0; j < n; ++j)
          if (seed.matrix.b[i][j] < 0 && !done[j]) incoming = true;
        if (!incoming) src = i;
      }
      if (src < 0) throw InternalError("no source available in sweep");
      seed = seed.mutated(src);
      done[src] = true;
      auto it = seen.find(seed.cluster[src].key());
      if (it == seen.end()) {
        Label l{sweep, src};
        record(l, seed.cluster[src]);
        seed.labels[src] = l;
        r[src] = sweep;
        any_new = true;
      } else {
        seed.labels[src] = it->second;
        if (!wrap[src]) wrap[src] = it->second;
      }
      snapshot(seed);
    }
    if (!any_new) break;
  }

  res.r = r;
  for (const auto& [l, rec] : res.records) res.pi.push_back(l);
  std::sort(res.pi.begin(), res.pi.end());
  if (static_cast<int>(res.pi.size()) != type.pi_size())
    throw InternalError("walk found " + std::to_string(res.pi.size()) +
                        " cluster variables, expected " + std::to_string(type.pi_size()));

  // tau(t,j) = (t-1,j) with (-1,j) := (r_{j*}, j*); cross-check against the
  // wraparound observed in the walk: x_{(r_j+1, j)} = x_{(0, j*)}.
  std::vector<int> star = type.star();
  for (const auto& l : res.pi) {
    Label img = l.t > 0 ? Label{l.t - 1, l.j} : Label{r[star[l.j]], star[l.j]};
    res.tau.emplace(l, img);
  }
  for (int j = 0; j < n; ++j) {
    if (wrap[j] && *wrap[j] != Label{0, star[j]})
      throw InternalError("observed wraparound disagrees with star involution at vertex " +
                          std::to_string(j + 1));
  }
  return res;
}

ARWalkResult ar_walk(const DynkinType& type, const Orientation& orientation) {
  validate_orientation(type, orientation);
  return ar_walk_on(type, orientation, oriented_exchange_b(type.cartan(), orientation));
}

ARWalkResult dual_data(const DynkinType& type, const Orientation& orientation) {
  validate_orientation(type, orientation);
  return ar_walk_on(type, orientation, oriented_exchange_b(type.cartan_dual(), orientation));
}

}  // namespace ccs
