#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ccs/errors.hpp"

namespace ccs {

using Mat = std::vector<std::vector<int64_t>>;

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Finite-type Dynkin diagram.  Node numbering (0-based internally, 1-based in
// output):
//   A_n : path 1-2-...-n
//   B_n : path with a(n,n-1) = -2 (last node short)
//   C_n : path with a(n-1,n) = -2 (last node long)
//   D_n : path 1..n-2 plus nodes n-1, n attached to n-2
//   E_n : path 1-2-...-(n-1) plus node n attached to node 3
//   F_4 : path with a(2,3) = -2
//   G_2 : edge with a(1,2) = -3
// These conventions reproduce the exchange matrices printed with the A3/B3
// reference tables and are stable under the folding maps used here.
struct DynkinType {
  Series series;
  int rank;

  static DynkinType parse(const std::string& name);  // "B3", "E6", ...
  std::string name() const;

  int n() const { return rank; }
  int coxeter_number() const;
  Mat cartan() const;
  // Transposed Cartan matrix (the dual diagram D^vee on the same node set).
  Mat cartan_dual() const;
  // Star involution i -> i* (identity except A_n, D_odd, E6), 0-based.
  std::vector<int> star() const;
  // Tree edges {i,j} with i<j, 0-based.
  std::vector<std::pair<int, int>> edges() const;
  // Number of cluster variables n(h+2)/2.
  int pi_size() const { return rank * (coxeter_number() + 2) / 2; }

  bool simply_laced() const;
  bool operator==(const DynkinType&) const = default;
};

// Orientation of the underlying tree: every edge appears once, directed.
struct Orientation {
  std::vector<std::pair<int, int>> arrows;  // (from, to), 0-based

  static Orientation parse(const std::string& spec, const DynkinType& type);  // "1>2,3>2"
  std::string str() const;
};

// Default orientations are pinned so golden outputs are stable: A3 uses the
// order reproducing the printed A3 exchange matrix (1>2, 3>2); every other
// type orients each tree edge from lower to higher index.
Orientation default_orientation(const DynkinType& type);

void validate_orientation(const DynkinType& type, const Orientation& o);

// Classify a full-subgraph component of a Dynkin diagram given by the Cartan
// entries restricted to `nodes`; used for boundary-stratum factors.
DynkinType classify_component(const Mat& cartan, const std::vector<int>& nodes);

}  // namespace ccs
