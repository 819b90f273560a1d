#include "ccs/compat.hpp"

#include <algorithm>
#include <numeric>

#include "ccs/exchange_graph.hpp"
#include "ccs/parallel.hpp"

namespace ccs {

size_t CompatibilityTable::idx(const Label& l) const {
  auto it = std::lower_bound(pi.begin(), pi.end(), l);
  if (it == pi.end() || *it != l) throw InternalError("label not in Pi: " + l.str());
  return static_cast<size_t>(it - pi.begin());
}

namespace {

// Coefficient-free mutation of a cluster of Laurent polynomials driven by the
// mutable block alone.
std::vector<Laurent> mutate_cluster(const std::vector<Laurent>& cluster, const Mat& b, int k) {
  const int n = static_cast<int>(b.size());
  const Vars& vars = cluster[0].vars();
  Laurent pos = Laurent::one(vars), neg = Laurent::one(vars);
  for (int i = 0; i < n; ++i) {
    int64_t e = b[i][k];
    if (e > 0) pos = pos * cluster[i].pow(static_cast<uint32_t>(e));
    if (e < 0) neg = neg * cluster[i].pow(static_cast<uint32_t>(-e));
  }
  std::vector<Laurent> r = cluster;
  r[k] = Laurent::divide_exact(pos + neg, cluster[k]);
  return r;
}

Mat mutate_b(const Mat& b, int k) {
  const int n = static_cast<int>(b.size());
  Mat r = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r[i][j] = -b[i][j];
      } else {
        int64_t prod = b[i][k] * b[k][j];
        r[i][j] = b[i][j] + (prod > 0 ? (b[i][k] > 0 ? prod : -prod) : 0);
      }
    }
  return r;
}

}  // namespace

CompatibilityTable build_compat_table(const ARWalkResult& walk, int jobs) {
  const int n = walk.type.rank;
  const size_t np = walk.pi.size();
  CompatibilityTable table;
  table.pi = walk.pi;
  table.deg.assign(np, std::vector<int>(np, 0));

  // Coefficient-free shadow of each cluster variable, used to recognize the
  // variables produced while walking from a re-rooted seed.
  std::map<Label, Laurent> bare_records = bare_expansions(walk);
  std::map<std::string, Label> bare_of;
  for (const auto& [l, p] : bare_records) bare_of.emplace(p.key(), l);

  // Greedy snapshot cover of Pi, plus the row owner of each omega.
  std::vector<size_t> chosen;
  std::map<Label, size_t> owner;  // omega -> index into `chosen`
  for (size_t s = 0; s < walk.snapshots.size() && owner.size() < np; ++s) {
    bool useful = false;
    for (const auto& l : walk.snapshots[s].labels)
      if (!owner.count(l)) useful = true;
    if (!useful) continue;
    chosen.push_back(s);
    for (const auto& l : walk.snapshots[s].labels)
      owner.emplace(l, chosen.size() - 1);
  }
  if (owner.size() != np) throw InternalError("walk snapshots do not cover Pi");

  std::vector<std::string> znames;
  for (int i = 1; i <= n; ++i) znames.push_back("z" + std::to_string(i));
  Vars zvars = make_vars(znames);
  const int max_sweeps = walk.type.coxeter_number() + 3;

  parallel_for(chosen.size(), jobs, [&](size_t ci) {
    const WalkSnapshot& snap = walk.snapshots[chosen[ci]];
    // Double seed: fresh expansions rooted at the snapshot, original
    // coefficient-free expansions for label recognition.
    Mat b = snap.b;
    std::vector<Laurent> fresh, orig;
    std::vector<Label> labels = snap.labels;
    for (int i = 0; i < n; ++i) {
      fresh.push_back(Laurent::variable(zvars, static_cast<size_t>(i)));
      orig.push_back(bare_records.at(labels[i]));
    }
    std::map<Label, Laurent> fresh_of;
    for (int i = 0; i < n; ++i) fresh_of.emplace(labels[i], fresh[i]);

    int sweeps = 0;
    while (fresh_of.size() < np) {
      if (++sweeps > max_sweeps)
        throw InternalError("re-rooted walk failed to enumerate Pi");
      std::vector<bool> done(n, false);
      for (int step = 0; step < n; ++step) {
        int src = -1;
        for (int i = 0; i < n && src < 0; ++i) {
          if (done[i]) continue;
          bool incoming = false;
          for (int j = 0; j < n; ++j)
            if (b[i][j] < 0 && !done[j]) incoming = true;
          if (!incoming) src = i;
        }
        if (src < 0) throw InternalError("re-rooted walk: no source");
        fresh = mutate_cluster(fresh, b, src);
        orig = mutate_cluster(orig, b, src);
        b = mutate_b(b, src);
        done[src] = true;
        auto it = bare_of.find(orig[src].key());
        if (it == bare_of.end())
          throw InternalError("re-rooted walk produced an unknown cluster variable");
        labels[src] = it->second;
        fresh_of.emplace(it->second, fresh[src]);
      }
    }

    for (int p = 0; p < n; ++p) {
      const Label& omega = snap.labels[p];
      if (owner.at(omega) != ci) continue;
      size_t wi = table.idx(omega);
      for (size_t gi = 0; gi < np; ++gi) {
        const Laurent& e = fresh_of.at(table.pi[gi]);
        int32_t lo = 0;
        for (const auto& [ev, c] : e.terms()) lo = std::min(lo, ev[p]);
        table.deg[wi][gi] = -lo;
      }
    }
  });

  return table;
}

int compatibility_degree(const Label& omega, const Label& gamma, const ARWalkResult& walk) {
  CompatibilityTable t = build_compat_table(walk);
  return t(omega, gamma);
}

StratumDescriptor stratum(const Label& gamma, const ARWalkResult& walk,
                          const CompatibilityTable& table) {
  StratumDescriptor d;
  d.gamma = gamma;
  for (const auto& k : table.pi)
    if (k != gamma && table(k, gamma) == 0) d.compatible_set.push_back(k);

  Mat cartan = walk.type.cartan();
  const int n = walk.type.rank;
  std::vector<bool> removed(n, false), seen(n, false);
  removed[gamma.j] = true;
  seen[gamma.j] = true;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = true;
    for (size_t q = 0; q < comp.size(); ++q) {
      for (int j = 0; j < n; ++j) {
        if (!seen[j] && cartan[comp[q]][j] != 0) {
          seen[j] = true;
          comp.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    d.factors.push_back(classify_component(cartan, comp));
  }
  return d;
}

}  // namespace ccs
