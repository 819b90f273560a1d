#include "ccs/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace ccs {

std::map<Label, Laurent> bare_expansions(const ARWalkResult& walk) {
  const int n = walk.type.rank;
  std::vector<std::string> xnames;
  for (int i = 1; i <= n; ++i) xnames.push_back("x" + std::to_string(i));
  Vars xvars = make_vars(xnames);
  std::vector<size_t> yidx(n);
  std::iota(yidx.begin(), yidx.end(), static_cast<size_t>(n));
  std::map<Label, Laurent> bare;
  for (const auto& [l, rec] : walk.records)
    bare.emplace(l, rec.expansion.set_vars_to_one(yidx, xvars));
  return bare;
}

namespace {

struct GraphSeed {
  Mat b;
  Mat coeff;
  std::vector<Laurent> cluster;  // bare expansions
  std::vector<Label> labels;
};

int64_t entry(const GraphSeed& s, int row, int col) {
  int n = static_cast<int>(s.b.size());
  return row < n ? s.b[row][col] : s.coeff[row - n][col];
}

void mutate_matrix(Mat& b, Mat& coeff, int k) {
  const int n = static_cast<int>(b.size());
  const int m = static_cast<int>(coeff.size());
  Mat nb = b;
  Mat nc = coeff;
  auto get = [&](int i, int j) { return i < n ? b[i][j] : coeff[i - n][j]; };
  auto put = [&](int i, int j, int64_t v) {
    if (i < n) nb[i][j] = v; else nc[i - n][j] = v;
  };
  for (int i = 0; i < n + m; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        put(i, j, -get(i, j));
      } else {
        int64_t prod = get(i, k) * get(k, j);
        put(i, j, get(i, j) + (prod > 0 ? (get(i, k) > 0 ? prod : -prod) : 0));
      }
    }
  b = std::move(nb);
  coeff = std::move(nc);
}

}  // namespace

ExchangeGraphResult exchange_graph(const ARWalkResult& walk, const Mat& coeff_rows,
                                   size_t max_seeds) {
  const int n = walk.type.rank;
  const int m = static_cast<int>(coeff_rows.size());
  std::map<Label, Laurent> bare = bare_expansions(walk);
  std::map<std::string, Label> label_of;
  for (const auto& [l, p] : bare) label_of.emplace(p.key(), l);

  GraphSeed init;
  init.b = walk.b0;
  init.coeff = coeff_rows;
  for (int i = 0; i < n; ++i) {
    init.cluster.push_back(bare.at(Label{0, i}));
    init.labels.push_back(Label{0, i});
  }

  ExchangeGraphResult res;
  std::map<std::vector<Label>, size_t> cluster_index;
  auto cluster_key = [&](const std::vector<Label>& labels) {
    std::vector<Label> k = labels;
    std::sort(k.begin(), k.end());
    return k;
  };
  std::map<std::pair<Label, Label>, size_t> relation_index;
  std::set<std::pair<size_t, size_t>> edge_set;

  std::deque<GraphSeed> queue;
  auto add_cluster = [&](const GraphSeed& s) -> std::pair<size_t, bool> {
    auto key = cluster_key(s.labels);
    auto it = cluster_index.find(key);
    if (it != cluster_index.end()) return {it->second, false};
    size_t id = res.clusters.size();
    cluster_index.emplace(key, id);
    res.clusters.push_back(key);
    queue.push_back(s);
    if (res.clusters.size() > max_seeds)
      throw InternalError("exchange graph exceeded the seed guard");
    return {id, true};
  };
  add_cluster(init);

  const Vars& xvars = init.cluster[0].vars();
  while (!queue.empty()) {
    GraphSeed s = std::move(queue.front());
    queue.pop_front();
    size_t sid = cluster_index.at(cluster_key(s.labels));
    for (int k = 0; k < n; ++k) {
      Laurent pos = Laurent::one(xvars), neg = Laurent::one(xvars);
      ExchangeRelation rel;
      rel.m_coeff.assign(m, 0);
      rel.mp_coeff.assign(m, 0);
      for (int i = 0; i < n + m; ++i) {
        int64_t e = entry(s, i, k);
        if (e == 0) continue;
        if (i < n) {
          if (e > 0) {
            pos = pos * s.cluster[i].pow(static_cast<uint32_t>(e));
            rel.m_vars[s.labels[i]] += static_cast<int>(e);
          } else {
            neg = neg * s.cluster[i].pow(static_cast<uint32_t>(-e));
            rel.mp_vars[s.labels[i]] += static_cast<int>(-e);
          }
        } else {
          if (e > 0) rel.m_coeff[i - n] = e; else rel.mp_coeff[i - n] = -e;
        }
      }
      GraphSeed t = s;
      t.cluster[k] = Laurent::divide_exact(pos + neg, s.cluster[k]);
      mutate_matrix(t.b, t.coeff, k);
      auto it = label_of.find(t.cluster[k].key());
      if (it == label_of.end())
        throw InternalError("exchange graph produced an unknown cluster variable");
      t.labels[k] = it->second;

      rel.a = s.labels[k];
      rel.b = t.labels[k];
      auto pair_key = std::minmax(rel.a, rel.b);
      auto rit = relation_index.find(pair_key);
      if (rit == relation_index.end()) {
        if (rel.b < rel.a) {
          std::swap(rel.a, rel.b);
          std::swap(rel.m_vars, rel.mp_vars);
          std::swap(rel.m_coeff, rel.mp_coeff);
        }
        relation_index.emplace(pair_key, res.relations.size());
        res.relations.push_back(rel);
      } else {
        const ExchangeRelation& prev = res.relations[rit->second];
        bool same = (prev.m_vars == rel.m_vars && prev.m_coeff == rel.m_coeff &&
                     prev.mp_vars == rel.mp_vars && prev.mp_coeff == rel.mp_coeff);
        bool swapped = (prev.m_vars == rel.mp_vars && prev.m_coeff == rel.mp_coeff &&
                        prev.mp_vars == rel.m_vars && prev.mp_coeff == rel.m_coeff);
        if (!same && !swapped)
          throw InternalError("inconsistent exchange relation for a variable pair");
      }

      size_t tid = add_cluster(t).first;
      auto e = std::minmax(sid, tid);
      edge_set.emplace(e.first, e.second);
    }
  }
  res.edges.assign(edge_set.begin(), edge_set.end());
  return res;
}

}  // namespace ccs
