#pragma once

#include "ccs/dynkin.hpp"
#include "ccs/laurent.hpp"

namespace ccs {

// Extended exchange matrix: mutable n x n top block B plus m coefficient
// rows.  B_ij = -a_ij if i->j, a_ij if j->i per the orientation.
struct ExchangeMatrix {
  Mat b;       // n x n
  Mat coeff;   // m x n
  DynkinType type;
  Orientation orientation;

  int n() const { return static_cast<int>(b.size()); }
  int m() const { return static_cast<int>(coeff.size()); }

  int64_t entry(int row, int col) const {
    return row < n() ? b[row][col] : coeff[row - n()][col];
  }

  ExchangeMatrix mutated(int k) const;  // direction k in [0, n)

  // arrows i->j of the top block (B_ij > 0)
  bool arrow(int i, int j) const { return b[i][j] > 0; }
  std::vector<int> sources() const;

  bool operator==(const ExchangeMatrix& o) const { return b == o.b && coeff == o.coeff; }
};

// Square matrix from a Cartan matrix and an orientation.
Mat oriented_exchange_b(const Mat& cartan, const Orientation& o);

ExchangeMatrix exchange_matrix(const DynkinType& type, const Orientation& o);
// Principal coefficients: bottom block = identity.
ExchangeMatrix principal_matrix(const DynkinType& type, const Orientation& o);
// Same as exchange_matrix but with the dual Cartan (type D^vee, same tree).
Mat dual_exchange_b(const DynkinType& type, const Orientation& o);

// Positive diagonal symmetrizer Z with Z B skew-symmetric (from the Cartan
// symmetrizer); used in tests.
std::vector<int64_t> symmetrizer(const DynkinType& type);

bool is_skew_symmetrizable(const Mat& b, const std::vector<int64_t>& z);

}  // namespace ccs
