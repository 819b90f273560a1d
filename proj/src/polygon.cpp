#include "ccs/polygon.hpp"

#include <algorithm>
#include <numeric>

namespace ccs {

namespace {

// Strict crossing of chords {a1,a2}, {b1,b2} of an M-gon.
bool chords_cross(int M, std::pair<int, int> a, std::pair<int, int> b) {
  if (a.first == b.first || a.first == b.second || a.second == b.first ||
      a.second == b.second)
    return false;
  auto strictly_between = [&](int x, int lo, int hi) {
    int dx = ((x - lo) % M + M) % M;
    int dh = ((hi - lo) % M + M) % M;
    return dx > 0 && dx < dh;
  };
  return strictly_between(b.first, a.first, a.second) !=
         strictly_between(b.second, a.first, a.second);
}

struct ModelBuilder {
  PolygonModel m;
  // crossing representatives per object (possibly several chords)
  std::vector<std::vector<std::pair<int, int>>> reps;
  std::vector<int> ray_pos;   // >= 0 with tag for diameters in type D; else -1
  std::vector<int> ray_tag;
};

void finish_symmetric_from_reps(ModelBuilder& b, int M, bool one_of_gamma_vs_all_of_omega) {
  const size_t k = b.m.names.size();
  b.m.deg.assign(k, std::vector<int>(k, 0));
  for (size_t w = 0; w < k; ++w)
    for (size_t g = 0; g < k; ++g) {
      if (w == g) continue;
      int c = 0;
      if (one_of_gamma_vs_all_of_omega) {
        for (const auto& rw : b.reps[w]) c += chords_cross(M, b.reps[g][0], rw) ? 1 : 0;
      } else {
        for (const auto& rg : b.reps[g]) c += chords_cross(M, b.reps[w][0], rg) ? 1 : 0;
      }
      b.m.deg[w][g] = c;
    }
}

std::vector<size_t> perm_from_vertex_map(
    const std::vector<std::string>& names,
    const std::map<std::string, size_t>& index_of,
    const std::vector<std::string>& mapped_names) {
  std::vector<size_t> p(names.size());
  for (size_t i = 0; i < names.size(); ++i) p[i] = index_of.at(mapped_names[i]);
  return p;
}

}  // namespace

PolygonModel model_A(int rank) {
  const int n = rank + 3;
  PolygonModel m;
  std::vector<std::pair<int, int>> diag;
  auto is_diag = [&](int i, int j) {
    int d = ((j - i) % n + n) % n;
    return d >= 2 && d <= n - 2;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (is_diag(i, j)) diag.emplace_back(i, j);
  std::map<std::pair<int, int>, size_t> idx;
  for (size_t k = 0; k < diag.size(); ++k) {
    idx[diag[k]] = k;
    m.names.push_back("u(" + std::to_string(diag[k].first + 1) + "," +
                      std::to_string(diag[k].second + 1) + ")");
  }
  m.deg.assign(diag.size(), std::vector<int>(diag.size(), 0));
  for (size_t a = 0; a < diag.size(); ++a)
    for (size_t b = 0; b < diag.size(); ++b)
      m.deg[a][b] = chords_cross(n, diag[a], diag[b]) ? 1 : 0;
  for (int dir : {1, -1}) {
    std::vector<size_t> p(diag.size());
    for (size_t k = 0; k < diag.size(); ++k) {
      int u = (diag[k].first + dir + n) % n, v = (diag[k].second + dir + n) % n;
      if (u > v) std::swap(u, v);
      p[k] = idx.at({u, v});
    }
    m.tau_candidates.push_back(std::move(p));
  }
  return m;
}

PolygonModel model_BC(int rank, bool is_b) {
  const int N = rank + 1;   // polygon P_{2N}
  const int M = 2 * N;
  ModelBuilder b;
  // object kinds: LONG(i) = {i, i+N}; SAME(i,j) = {{i,j},{i+N,j+N}};
  // MIXED(i,j) = {{i,j+N},{j,i+N}} -- 0-based plain vertices.
  struct Obj { int kind, i, j; };
  std::vector<Obj> objs;
  for (int i = 0; i < N; ++i) objs.push_back({0, i, i});
  for (int i = 0; i < N; ++i)
    for (int j = i + 2; j < N; ++j) objs.push_back({1, i, j});
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (!(i == 0 && j == N - 1)) objs.push_back({2, i, j});
  std::map<std::string, size_t> index_of;
  auto name_of = [&](const Obj& o) {
    switch (o.kind) {
      case 0: return "u[" + std::to_string(o.i + 1) + "," + std::to_string(o.i + 1) + "b]";
      case 1: return "u[" + std::to_string(o.i + 1) + "," + std::to_string(o.j + 1) + "]";
      default: return "u[" + std::to_string(o.i + 1) + "," + std::to_string(o.j + 1) + "b]";
    }
  };
  for (size_t k = 0; k < objs.size(); ++k) {
    const Obj& o = objs[k];
    b.m.names.push_back(name_of(o));
    index_of[b.m.names.back()] = k;
    if (o.kind == 0)
      b.reps.push_back({{o.i, o.i + N}});
    else if (o.kind == 1)
      b.reps.push_back({{o.i, o.j}, {o.i + N, o.j + N}});
    else
      b.reps.push_back({{o.i, o.j + N}, {o.j, o.i + N}});
  }
  // C: (omega||gamma) counts one chord of gamma against all chords of omega;
  // B: the mirror convention.
  finish_symmetric_from_reps(b, M, !is_b);

  // tau: rotation of P_{2N} by one vertex (both directions).
  auto rotate_obj = [&](const Obj& o, int dir) {
    auto norm = [&](int v) { return ((v + dir) % M + M) % M; };
    std::vector<int> vs;
    if (o.kind == 0) vs = {norm(o.i), norm(o.i + N)};
    else if (o.kind == 1) vs = {norm(o.i), norm(o.j)};
    else vs = {norm(o.i), norm(o.j + N)};
    // classify the rotated chord {vs[0], vs[1]} as an orbit class
    int u = vs[0] % N, v = vs[1] % N;
    bool ub = vs[0] >= N, vb = vs[1] >= N;
    if (u == v) return Obj{0, u, u};
    if (ub == vb) {
      if (u > v) std::swap(u, v);
      return Obj{1, u, v};
    }
    if (ub) { std::swap(u, v); std::swap(ub, vb); }
    if (u > v) return Obj{2, v, u};  // sigma image
    return Obj{2, u, v};
  };
  for (int dir : {1, -1}) {
    std::vector<std::string> mapped;
    for (const auto& o : objs) mapped.push_back(name_of(rotate_obj(o, dir)));
    b.m.tau_candidates.push_back(perm_from_vertex_map(b.m.names, index_of, mapped));
  }
  return b.m;
}

PolygonModel model_D(int rank) {
  const int n = rank;
  const int M = 2 * n;
  ModelBuilder b;
  struct Obj { int kind, i, j, tag; };  // kind 0 = ray(i, tag), 1 = arc(i,j)
  std::vector<Obj> objs;
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < 2; ++t) objs.push_back({0, i, i, t});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && i != (j + 1) % n) objs.push_back({1, i, j, 0});
  std::map<std::string, size_t> index_of;
  auto name_of = [&](const Obj& o) {
    if (o.kind == 0)
      return "u(" + std::to_string(o.i + 1) + (o.tag ? ")t" : ")");
    return "u(" + std::to_string(o.i + 1) + "," + std::to_string(o.j + 1) + ")";
  };
  for (size_t k = 0; k < objs.size(); ++k) {
    const Obj& o = objs[k];
    b.m.names.push_back(name_of(o));
    index_of[b.m.names.back()] = k;
    if (o.kind == 0) {
      b.reps.push_back({{o.i, o.i + n}});
    } else if (o.i < o.j) {
      b.reps.push_back({{o.i, o.j + n}, {o.j, o.i + n}});
    } else {
      b.reps.push_back({{o.j, o.i}, {o.j + n, o.i + n}});
    }
  }
  const size_t k = objs.size();
  b.m.deg.assign(k, std::vector<int>(k, 0));
  for (size_t w = 0; w < k; ++w)
    for (size_t g = 0; g < k; ++g) {
      if (w == g) continue;
      const Obj& ow = objs[w];
      const Obj& og = objs[g];
      if (ow.kind == 0 && og.kind == 0) {
        b.m.deg[w][g] = (ow.tag != og.tag && ow.i != og.i) ? 1 : 0;
      } else if (ow.kind == 0 || og.kind == 0) {
        // diameter against one representative of the arc pair
        const auto& diam = ow.kind == 0 ? b.reps[w][0] : b.reps[g][0];
        const auto& arc = ow.kind == 0 ? b.reps[g][0] : b.reps[w][0];
        b.m.deg[w][g] = chords_cross(M, diam, arc) ? 1 : 0;
      } else {
        int c = 0;
        for (const auto& rw : b.reps[w]) c += chords_cross(M, b.reps[g][0], rw) ? 1 : 0;
        b.m.deg[w][g] = c;
      }
    }

  // tau: rotate P_n by one step and flip the tag at the puncture.
  for (int dir : {1, -1}) {
    std::vector<std::string> mapped;
    for (const auto& o : objs) {
      auto norm = [&](int v) { return ((v + dir) % n + n) % n; };
      Obj r = o.kind == 0 ? Obj{0, norm(o.i), norm(o.i), 1 - o.tag}
                          : Obj{1, norm(o.i), norm(o.j), 0};
      mapped.push_back(name_of(r));
    }
    b.m.tau_candidates.push_back(perm_from_vertex_map(b.m.names, index_of, mapped));
  }
  return b.m;
}

PolygonModel model_G2() {
  PolygonModel m;
  // objects a1,b1,a2,b2,a3,b3,a4,b4; rows from the printed relations closed
  // under the index rotation i -> i+1.
  for (int i = 1; i <= 4; ++i) {
    m.names.push_back("a" + std::to_string(i));
    m.names.push_back("b" + std::to_string(i));
  }
  auto id = [&](char c, int i) { return static_cast<size_t>(2 * ((i - 1 + 4) % 4) + (c == 'b')); };
  m.deg.assign(8, std::vector<int>(8, 0));
  // (omega || a_1): a2 b2 a3^2 b3 a4 ; (omega || b_1): b2 a3^3 b3^2 a4^3 b4
  std::vector<std::tuple<char, int, int>> row_a = {
      {'a', 2, 1}, {'b', 2, 1}, {'a', 3, 2}, {'b', 3, 1}, {'a', 4, 1}};
  std::vector<std::tuple<char, int, int>> row_b = {
      {'b', 2, 1}, {'a', 3, 3}, {'b', 3, 2}, {'a', 4, 3}, {'b', 4, 1}};
  for (int s = 0; s < 4; ++s) {
    for (auto [c, i, e] : row_a) m.deg[id(c, i + s)][id('a', 1 + s)] = e;
    for (auto [c, i, e] : row_b) m.deg[id(c, i + s)][id('b', 1 + s)] = e;
  }
  return m;
}

PolygonModel polygon_model(const DynkinType& type) {
  switch (type.series) {
    case Series::A: return model_A(type.rank);
    case Series::B: return model_BC(type.rank, true);
    case Series::C: return model_BC(type.rank, false);
    case Series::D: return model_D(type.rank);
    case Series::G: return model_G2();
    default: throw UnsupportedType("no polygon model for " + type.name());
  }
}

namespace {

struct DictSearch {
  const CompatibilityTable& table;
  const PolygonModel& model;
  size_t n;
  std::vector<std::vector<size_t>> cands;
  std::vector<size_t> assign;      // pi index -> model index (n = unassigned)
  std::vector<bool> used;
  const std::vector<size_t>* tau_model = nullptr;
  std::vector<size_t> tau_pi;

  bool consistent(size_t i, size_t m) const {
    for (size_t k = 0; k < n; ++k) {
      if (assign[k] == n || k == i) continue;
      if (table.deg[i][k] != model.deg[m][assign[k]]) return false;
      if (table.deg[k][i] != model.deg[assign[k]][m]) return false;
    }
    return true;
  }

  bool place(size_t i, size_t m);

  bool dfs() {
    size_t best = n, best_count = SIZE_MAX;
    for (size_t i = 0; i < n; ++i) {
      if (assign[i] != n) continue;
      size_t c = 0;
      for (size_t m : cands[i])
        if (!used[m] && consistent(i, m)) c++;
      if (c < best_count) { best_count = c; best = i; }
    }
    if (best == n) return true;  // all assigned
    for (size_t m : cands[best]) {
      if (used[m] || !consistent(best, m)) continue;
      std::vector<size_t> saved_assign = assign;
      std::vector<bool> saved_used = used;
      if (place(best, m) && dfs()) return true;
      assign = std::move(saved_assign);
      used = std::move(saved_used);
    }
    return false;
  }
};

bool DictSearch::place(size_t i, size_t m) {
  // assign with tau-orbit propagation
  std::vector<std::pair<size_t, size_t>> todo{{i, m}};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    if (assign[a] != n) {
      if (assign[a] != b) return false;
      continue;
    }
    if (used[b] || !consistent(a, b)) return false;
    assign[a] = b;
    used[b] = true;
    if (tau_model) todo.emplace_back(tau_pi[a], (*tau_model)[b]);
  }
  return true;
}

}  // namespace

std::vector<size_t> find_dictionary(const CompatibilityTable& table, const PolygonModel& model) {
  const size_t n = table.pi.size();
  if (model.names.size() != n)
    throw InternalError("dictionary: size mismatch (" + std::to_string(n) + " vs " +
                        std::to_string(model.names.size()) + ")");

  // row/column degree multisets as a cheap invariant filter
  auto signature = [&](const std::vector<std::vector<int>>& deg, size_t i) {
    std::vector<int> s;
    for (size_t k = 0; k < n; ++k) s.push_back(deg[i][k]);
    for (size_t k = 0; k < n; ++k) s.push_back(-1 - deg[k][i]);
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<int>> sig_pi(n), sig_model(n);
  for (size_t i = 0; i < n; ++i) {
    sig_pi[i] = signature(table.deg, i);
    sig_model[i] = signature(model.deg, i);
  }

  DictSearch s{table, model, n, {}, {}, {}, nullptr, {}};
  s.cands.assign(n, {});
  for (size_t i = 0; i < n; ++i)
    for (size_t m = 0; m < n; ++m)
      if (sig_pi[i] == sig_model[m]) s.cands[i].push_back(m);

  s.tau_pi.assign(n, 0);

  std::vector<const std::vector<size_t>*> tau_options;
  for (const auto& t : model.tau_candidates) tau_options.push_back(&t);
  tau_options.push_back(nullptr);  // fall back to a compat-only search

  for (const auto* tau : tau_options) {
    s.assign.assign(n, n);
    s.used.assign(n, false);
    s.tau_model = tau;
    if (s.dfs()) return s.assign;
  }
  throw InternalError("no label dictionary found: compatibility table does not match model");
}

int polygon_oracle(const DynkinType& type, const Label& omega, const Label& gamma,
                   const CompatibilityTable& table) {
  PolygonModel m = polygon_model(type);
  std::vector<size_t> dict = find_dictionary(table, m);
  return m.deg[dict[table.idx(omega)]][dict[table.idx(gamma)]];
}

namespace {

void push_dedup(std::vector<ModelEquation>& out, ModelEquation eq) {
  if (eq.right < eq.left) std::swap(eq.left, eq.right);
  for (const auto& e : out)
    if (e.left == eq.left && e.right == eq.right) return;
  out.push_back(std::move(eq));
}

void mul_into(std::map<size_t, int>& side, std::optional<size_t> obj, int e = 1) {
  if (!obj) return;
  side[*obj] += e;
}

}  // namespace

std::vector<ModelEquation> family_A(int rank) {
  const int n = rank + 3;
  auto is_diag = [&](int i, int j) {
    int d = ((j - i) % n + n) % n;
    return d >= 2 && d <= n - 2;
  };
  std::map<std::pair<int, int>, size_t> idx;
  {
    size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (is_diag(i, j)) idx[{i, j}] = k++;
  }
  auto obj = [&](int i, int j) -> std::optional<size_t> {
    if (i > j) std::swap(i, j);
    auto it = idx.find({i, j});
    if (it == idx.end()) return std::nullopt;
    return it->second;
  };
  std::vector<ModelEquation> out;
  // cyclic intervals A=(a,b], B=(b,c], C=(c,d], D=(d,a]
  std::vector<int> cut(4);
  for (cut[0] = 0; cut[0] < n; ++cut[0])
    for (cut[1] = cut[0] + 1; cut[1] < n; ++cut[1])
      for (cut[2] = cut[1] + 1; cut[2] < n; ++cut[2])
        for (cut[3] = cut[2] + 1; cut[3] < n; ++cut[3]) {
          auto interval = [&](int from, int to) {  // (from, to] cyclically
            std::vector<int> v;
            for (int x = (from + 1) % n; ; x = (x + 1) % n) {
              v.push_back(x);
              if (x == to) break;
            }
            return v;
          };
          std::vector<std::vector<int>> iv;
          for (int k = 0; k < 4; ++k) iv.push_back(interval(cut[k], cut[(k + 1) % 4]));
          ModelEquation eq;
          for (int i : iv[0]) for (int j : iv[2]) mul_into(eq.left, obj(i, j));
          for (int i : iv[1]) for (int j : iv[3]) mul_into(eq.right, obj(i, j));
          push_dedup(out, std::move(eq));
        }
  return out;
}

std::vector<ModelEquation> family_D(int rank) {
  const int n = rank;
  std::map<std::pair<int, int>, size_t> arc_idx;
  std::map<std::pair<int, int>, size_t> ray_idx;  // (i, tag)
  {
    size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < 2; ++t) ray_idx[{i, t}] = k++;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && i != (j + 1) % n) arc_idx[{i, j}] = k++;
  }
  auto arc = [&](int i, int j) -> std::optional<size_t> {
    auto it = arc_idx.find({i, j});
    if (it == arc_idx.end()) return std::nullopt;
    return it->second;
  };
  auto U_IJ = [&](std::map<size_t, int>& side, const std::vector<int>& I,
                  const std::vector<int>& J) {
    for (int i : I)
      for (int j : J) mul_into(side, arc(i, j));
  };
  auto U_I = [&](std::map<size_t, int>& side, const std::vector<int>& I, int tag) {
    for (size_t a = 0; a < I.size(); ++a)
      for (size_t b = a + 1; b < I.size(); ++b) mul_into(side, arc(I[a], I[b]));
    for (int i : I) mul_into(side, ray_idx.at({i, tag}));
  };

  auto interval = [&](int from, int to) {  // (from, to] cyclically
    std::vector<int> v;
    for (int x = (from + 1) % n; ; x = (x + 1) % n) {
      v.push_back(x);
      if (x == to) break;
    }
    return v;
  };

  std::vector<ModelEquation> out;

  // family (i): U_{C,A} + U_{D,B} U_{A,B} U_{B,C} U_{B,D} U_B Ut_B = 1
  auto emit1 = [&](const std::vector<int>& A, const std::vector<int>& B,
                   const std::vector<int>& C, const std::vector<int>& D) {
    ModelEquation eq;
    U_IJ(eq.left, C, A);
    U_IJ(eq.right, D, B);
    U_IJ(eq.right, A, B);
    U_IJ(eq.right, B, C);
    U_IJ(eq.right, B, D);
    U_I(eq.right, B, 0);
    U_I(eq.right, B, 1);
    push_dedup(out, std::move(eq));
  };
  // family (ii): U_A U_{A,B} + Ut_C U_{B,C} = 1, plus the tag-swapped twin
  // (the two collapse to one equation under the fold to type B).
  auto emit2 = [&](const std::vector<int>& A, const std::vector<int>& B,
                   const std::vector<int>& C, int tag_a) {
    ModelEquation eq;
    U_I(eq.left, A, tag_a);
    U_IJ(eq.left, A, B);
    U_I(eq.right, C, 1 - tag_a);
    U_IJ(eq.right, B, C);
    push_dedup(out, std::move(eq));
  };

  std::vector<std::vector<int>> iv;
  std::vector<int> cut;
  auto for_cuts = [&](int k, auto&& body) {
    cut.assign(k, 0);
    std::function<void(int, int)> rec = [&](int pos, int start) {
      if (pos == k) {
        iv.clear();
        for (int c = 0; c < k; ++c) iv.push_back(interval(cut[c], cut[(c + 1) % k]));
        body();
        return;
      }
      for (int x = start; x < n; ++x) {
        cut[pos] = x;
        rec(pos + 1, x + 1);
      }
    };
    rec(0, 0);
  };

  for_cuts(4, [&] {
    for (int s = 0; s < 4; ++s)
      emit1(iv[s], iv[(s + 1) % 4], iv[(s + 2) % 4], iv[(s + 3) % 4]);
  });
  for_cuts(3, [&] {
    for (int s = 0; s < 3; ++s) {
      emit1(iv[s], iv[(s + 1) % 3], iv[(s + 2) % 3], {});
      emit2(iv[s], iv[(s + 1) % 3], iv[(s + 2) % 3], 0);
      emit2(iv[s], iv[(s + 1) % 3], iv[(s + 2) % 3], 1);
    }
  });
  for_cuts(2, [&] {
    emit2(iv[0], {}, iv[1], 0);
    emit2(iv[0], {}, iv[1], 1);
  });
  return out;
}

namespace {

// Push a family through an object-level fold: obj -> target object index.
std::vector<ModelEquation> fold_family(const std::vector<ModelEquation>& src,
                                       const std::vector<size_t>& to_target) {
  std::vector<ModelEquation> out;
  for (const auto& eq : src) {
    ModelEquation f;
    for (const auto& [o, e] : eq.left) f.left[to_target[o]] += e;
    for (const auto& [o, e] : eq.right) f.right[to_target[o]] += e;
    push_dedup(out, std::move(f));
  }
  return out;
}

}  // namespace

std::vector<ModelEquation> family_C(int rank) {
  const int N = rank + 1;
  const int nA = 2 * N;  // A_{2N-3} polygon
  // fold map: diagonal {i,j} of P_{2N} -> BC class index in model_BC order
  std::map<std::string, size_t> bc_index;
  {
    PolygonModel bc = model_BC(rank, false);
    for (size_t k = 0; k < bc.names.size(); ++k) bc_index[bc.names[k]] = k;
  }
  auto is_diag = [&](int i, int j) {
    int d = ((j - i) % nA + nA) % nA;
    return d >= 2 && d <= nA - 2;
  };
  std::vector<size_t> to_bc;
  for (int i = 0; i < nA; ++i)
    for (int j = i + 1; j < nA; ++j) {
      if (!is_diag(i, j)) continue;
      int u = i % N, v = j % N;
      bool ub = i >= N, vb = j >= N;
      std::string name;
      if (u == v) {
        name = "u[" + std::to_string(u + 1) + "," + std::to_string(u + 1) + "b]";
      } else if (ub == vb) {
        if (u > v) std::swap(u, v);
        name = "u[" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "]";
      } else {
        if (ub) std::swap(u, v);
        if (u > v) std::swap(u, v);  // sigma image of the mixed pair
        name = "u[" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "b]";
      }
      to_bc.push_back(bc_index.at(name));
    }
  return fold_family(family_A(2 * N - 3), to_bc);
}

std::vector<ModelEquation> family_B(int rank) {
  const int nD = rank + 1;
  std::map<std::string, size_t> bc_index;
  {
    PolygonModel bc = model_BC(rank, true);
    for (size_t k = 0; k < bc.names.size(); ++k) bc_index[bc.names[k]] = k;
  }
  // model_D object order: rays (i,tag) then arcs (i,j)
  std::vector<size_t> to_bc;
  for (int i = 0; i < nD; ++i)
    for (int t = 0; t < 2; ++t) {
      (void)t;
      to_bc.push_back(bc_index.at("u[" + std::to_string(i + 1) + "," +
                                  std::to_string(i + 1) + "b]"));
    }
  for (int i = 0; i < nD; ++i)
    for (int j = 0; j < nD; ++j) {
      if (i == j || i == (j + 1) % nD) continue;
      std::string name = i < j
          ? "u[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "b]"
          : "u[" + std::to_string(j + 1) + "," + std::to_string(i + 1) + "]";
      to_bc.push_back(bc_index.at(name));
    }
  return fold_family(family_D(nD), to_bc);
}

}  // namespace ccs
