#pragma once

#include <map>

#include "ccs/alphabet.hpp"
#include "ccs/seed.hpp"

namespace ccs {

struct ClusterVariableRecord {
  Label label;
  Laurent expansion;  // in x_1..x_n, y_1..y_n (principal coefficients)
  Laurent f_poly;     // expansion at x_i = 1, in y_1..y_n
  std::vector<int64_t> g;  // degree under deg(x_i)=e_i, deg(y_i)=-B e_i
};

// Snapshot of a seed visited by the walk; enough to re-root from it.
struct WalkSnapshot {
  Mat b;                      // n x n mutable block
  std::vector<Label> labels;  // cluster content by position
};

struct ARWalkResult {
  DynkinType type;
  Orientation orientation;
  Mat b0;                     // initial exchange matrix (top block)
  std::vector<Label> pi;      // canonical order: lexicographic (t, j)
  std::vector<int> r;         // per vertex, |Pi| = sum (r_j + 1)
  std::map<Label, ClusterVariableRecord> records;
  std::map<Label, Label> tau;          // (t,j) -> (t-1,j), wrapping to (r_{j*}, j*)
  std::vector<std::vector<Label>> clusters;   // distinct clusters visited, sorted labels
  std::vector<WalkSnapshot> snapshots;        // seeds visited in order
  Vars yvars;                 // y_1..y_n

  size_t index(const Label& l) const;  // position in pi
  int tau_order() const;
  FTable f_table() const;              // gamma -> F_gamma(y)
  // Newton exponents of F_gamma (initial labels give {0}).
  std::vector<ExpVec> newton(const Label& g) const;
};

// Enumerate Pi by source-mutation sweeps over the principal-coefficient seed.
// A sweep mutates every vertex once, always at a source; the walk stops when
// a full sweep reproduces only already-seen cluster variables.  Guarded by
// h+2 sweeps (InternalError beyond).
ARWalkResult ar_walk(const DynkinType& type, const Orientation& orientation);

// Same walk run on an explicit mutable block (used for B^vee): `b` must be
// an oriented exchange matrix for a finite-type Cartan on the same tree.
ARWalkResult ar_walk_on(const DynkinType& type, const Orientation& orientation, const Mat& b);

// AR walk on the dual exchange matrix B^vee (type D^vee, same orientation);
// labels are matched (t,j) <-> (t,j).  Exposes the g^vee vectors.
ARWalkResult dual_data(const DynkinType& type, const Orientation& orientation);

}  // namespace ccs
