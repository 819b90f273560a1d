#include "ccs/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace ccs {

namespace {

void check_classification(Series s, int rank) {
  bool ok = false;
  switch (s) {
    case Series::A: ok = rank >= 1; break;
    case Series::B: ok = rank >= 2; break;
    case Series::C: ok = rank >= 2; break;
    case Series::D: ok = rank >= 4; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
    case Series::F: ok = rank == 4; break;
    case Series::G: ok = rank == 2; break;
  }
  if (!ok)
    throw UnsupportedType("not in the finite-type classification: " +
                          std::string(1, static_cast<char>(s)) + std::to_string(rank));
}

}  // namespace

DynkinType DynkinType::parse(const std::string& name) {
  if (name.size() < 2) throw UnsupportedType("cannot parse type '" + name + "'");
  char c = static_cast<char>(std::toupper(name[0]));
  if (std::string("ABCDEFG").find(c) == std::string::npos)
    throw UnsupportedType("unknown series '" + name + "'");
  int rank = 0;
  try {
    size_t pos = 0;
    rank = std::stoi(name.substr(1), &pos);
    if (pos + 1 != name.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw UnsupportedType("cannot parse rank in '" + name + "'");
  }
  DynkinType t{static_cast<Series>(c), rank};
  check_classification(t.series, t.rank);
  return t;
}

std::string DynkinType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

int DynkinType::coxeter_number() const {
  switch (series) {
    case Series::A: return rank + 1;
    case Series::B:
    case Series::C: return 2 * rank;
    case Series::D: return 2 * rank - 2;
    case Series::E: return rank == 6 ? 12 : (rank == 7 ? 18 : 30);
    case Series::F: return 12;
    case Series::G: return 6;
  }
  throw InternalError("unreachable");
}

std::vector<std::pair<int, int>> DynkinType::edges() const {
  std::vector<std::pair<int, int>> e;
  switch (series) {
    case Series::A:
    case Series::B:
    case Series::C:
    case Series::F:
    case Series::G:
      for (int i = 0; i + 1 < rank; ++i) e.emplace_back(i, i + 1);
      break;
    case Series::D:
      for (int i = 0; i + 1 < rank - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(rank - 3, rank - 1);
      break;
    case Series::E:
      for (int i = 0; i + 1 < rank - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(2, rank - 1);
      break;
  }
  return e;
}

Mat DynkinType::cartan() const {
  check_classification(series, rank);
  Mat a(rank, std::vector<int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  for (auto [i, j] : edges()) a[i][j] = a[j][i] = -1;
  switch (series) {
    case Series::B: a[rank - 1][rank - 2] = -2; break;
    case Series::C: a[rank - 2][rank - 1] = -2; break;
    case Series::F: a[1][2] = -2; break;
    case Series::G: a[0][1] = -3; break;
    default: break;
  }
  return a;
}

Mat DynkinType::cartan_dual() const {
  Mat a = cartan();
  Mat at(rank, std::vector<int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) at[i][j] = a[j][i];
  return at;
}

std::vector<int> DynkinType::star() const {
  std::vector<int> s(rank);
  for (int i = 0; i < rank; ++i) s[i] = i;
  switch (series) {
    case Series::A:
      for (int i = 0; i < rank; ++i) s[i] = rank - 1 - i;
      break;
    case Series::D:
      if (rank % 2 == 1) std::swap(s[rank - 2], s[rank - 1]);
      break;
    case Series::E:
      if (rank == 6) {
        s[0] = 4; s[4] = 0;
        s[1] = 3; s[3] = 1;
      }
      break;
    default:
      break;
  }
  return s;
}

bool DynkinType::simply_laced() const {
  switch (series) {
    case Series::A:
    case Series::D:
    case Series::E: return true;
    default: return false;
  }
}

Orientation Orientation::parse(const std::string& spec, const DynkinType& type) {
  Orientation o;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto pos = item.find('>');
    if (pos == std::string::npos)
      throw UnsupportedType("bad orientation item '" + item + "' (expected i>j)");
    int from = std::stoi(item.substr(0, pos)) - 1;
    int to = std::stoi(item.substr(pos + 1)) - 1;
    o.arrows.emplace_back(from, to);
  }
  validate_orientation(type, o);
  return o;
}

std::string Orientation::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < arrows.size(); ++k) {
    if (k) os << ",";
    os << arrows[k].first + 1 << ">" << arrows[k].second + 1;
  }
  return os.str();
}

Orientation default_orientation(const DynkinType& type) {
  Orientation o;
  if (type.series == Series::A && type.rank == 3) {
    o.arrows = {{0, 1}, {2, 1}};
    return o;
  }
  for (auto [i, j] : type.edges()) o.arrows.emplace_back(i, j);
  return o;
}

void validate_orientation(const DynkinType& type, const Orientation& o) {
  std::set<std::pair<int, int>> tree;
  for (auto [i, j] : type.edges()) tree.emplace(i, j);
  std::set<std::pair<int, int>> seen;
  for (auto [f, t] : o.arrows) {
    if (f < 0 || t < 0 || f >= type.rank || t >= type.rank)
      throw UnsupportedType("orientation mentions node outside 1.." + std::to_string(type.rank));
    auto e = std::minmax(f, t);
    if (!tree.count({e.first, e.second}))
      throw UnsupportedType("orientation edge " + std::to_string(f + 1) + ">" +
                            std::to_string(t + 1) + " is not a tree edge of " + type.name());
    if (!seen.emplace(e.first, e.second).second)
      throw UnsupportedType("orientation repeats an edge");
  }
  if (seen.size() != tree.size())
    throw UnsupportedType("orientation must cover every tree edge exactly once");
}

DynkinType classify_component(const Mat& cartan, const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k == 0) throw InternalError("classify_component: empty node set");
  // Collect induced edges with multiplicities m = a_ij * a_ji.
  std::vector<int> deg(k, 0);
  int max_mult = 1;
  std::vector<std::tuple<int, int, int64_t, int64_t>> ed;  // (u, v, a_uv, a_vu)
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) {
      int64_t a = cartan[nodes[u]][nodes[v]], b = cartan[nodes[v]][nodes[u]];
      if (a != 0) {
        ed.emplace_back(u, v, a, b);
        deg[u]++; deg[v]++;
        max_mult = std::max<int>(max_mult, static_cast<int>(a * b));
      }
    }
  if (static_cast<int>(ed.size()) != k - 1)
    throw InternalError("classify_component: not a tree");
  int branches = static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d >= 3; }));
  if (max_mult == 3) return {Series::G, 2};
  if (max_mult == 2) {
    // B/C/F by the position and direction of the double bond.
    auto it = std::find_if(ed.begin(), ed.end(), [](const auto& e) {
      return std::get<2>(e) * std::get<3>(e) == 2;
    });
    auto [u, v, a, b] = *it;
    if (k == 4 && deg[u] == 2 && deg[v] == 2) return {Series::F, 4};
    // Walk to decide whether the short root sits at a leaf end: a_uv = -2
    // means u is the short side of the bond.
    int short_end = (a == -2) ? u : v;
    return {deg[short_end] == 1 && k >= 2 ? Series::B : Series::C, k};
    // (For rank 2 the B/C distinction is immaterial: B2 and C2 coincide.)
  }
  if (branches == 0) return {Series::A, k};
  if (k >= 4 && branches == 1) {
    // D_k or E_k: D has a branch node adjacent to two leaves.
    int bn = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
    int leaf_nbrs = 0;
    for (auto& [u, v, a, b] : ed) {
      if (u == bn && deg[v] == 1) leaf_nbrs++;
      if (v == bn && deg[u] == 1) leaf_nbrs++;
    }
    if (leaf_nbrs >= 2) return {Series::D, k};
    if (k >= 6 && k <= 8) return {Series::E, k};
  }
  throw InternalError("classify_component: unrecognized diagram");
}

}  // namespace ccs
