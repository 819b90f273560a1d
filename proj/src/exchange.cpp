#include "ccs/exchange.hpp"

#include <algorithm>
#include <numeric>

namespace ccs {

Mat oriented_exchange_b(const Mat& cartan, const Orientation& o) {
  const size_t n = cartan.size();
  Mat b(n, std::vector<int64_t>(n, 0));
  for (auto [f, t] : o.arrows) {
    b[f][t] = -cartan[f][t];
    b[t][f] = cartan[t][f];
  }
  return b;
}

ExchangeMatrix exchange_matrix(const DynkinType& type, const Orientation& o) {
  validate_orientation(type, o);
  return {oriented_exchange_b(type.cartan(), o), {}, type, o};
}

ExchangeMatrix principal_matrix(const DynkinType& type, const Orientation& o) {
  ExchangeMatrix m = exchange_matrix(type, o);
  m.coeff.assign(type.rank, std::vector<int64_t>(type.rank, 0));
  for (int i = 0; i < type.rank; ++i) m.coeff[i][i] = 1;
  return m;
}

Mat dual_exchange_b(const DynkinType& type, const Orientation& o) {
  validate_orientation(type, o);
  return oriented_exchange_b(type.cartan_dual(), o);
}

ExchangeMatrix ExchangeMatrix::mutated(int k) const {
  const int rows = n() + m(), cols = n();
  ExchangeMatrix r = *this;
  auto& rb = r.b;
  auto& rc = r.coeff;
  auto set = [&](int i, int j, int64_t v) {
    if (i < n()) rb[i][j] = v; else rc[i - n()][j] = v;
  };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      int64_t v;
      if (i == k || j == k) {
        v = -entry(i, j);
      } else {
        int64_t bik = entry(i, k), bkj = entry(k, j);
        int64_t corr = bik * bkj > 0 ? (bik > 0 ? bik * bkj : -bik * bkj) : 0;
        v = entry(i, j) + corr;
      }
      set(i, j, v);
    }
  }
  return r;
}

std::vector<int> ExchangeMatrix::sources() const {
  std::vector<int> s;
  for (int i = 0; i < n(); ++i) {
    bool out = false, in = false;
    for (int j = 0; j < n(); ++j) {
      if (b[i][j] > 0) out = true;
      if (b[i][j] < 0) in = true;
    }
    if (!in && (out || n() == 1)) s.push_back(i);
  }
  return s;
}

std::vector<int64_t> symmetrizer(const DynkinType& type) {
  // d_i a_ij = d_j a_ji with positive integers d_i, found by tree traversal.
  Mat a = type.cartan();
  const int n = type.rank;
  std::vector<int64_t> num(n, 0), den(n, 1);
  num[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i != j && a[i][j] != 0 && num[j] == 0) {
        // d_j = d_i * a_ij / a_ji
        num[j] = num[i] * a[i][j];
        den[j] = den[i] * a[j][i];
        if (num[j] * den[j] < 0) { num[j] = -num[j]; den[j] = -den[j]; }
        stack.push_back(j);
      }
    }
  }
  int64_t l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
  std::vector<int64_t> d(n);
  for (int i = 0; i < n; ++i) d[i] = num[i] * (l / den[i]);
  int64_t g = 0;
  for (int i = 0; i < n; ++i) g = std::gcd(g, d[i]);
  for (int i = 0; i < n; ++i) d[i] /= g;
  return d;
}

bool is_skew_symmetrizable(const Mat& b, const std::vector<int64_t>& z) {
  const size_t n = b.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (z[i] * b[i][j] != -z[j] * b[j][i]) return false;
  return true;
}

}  // namespace ccs
