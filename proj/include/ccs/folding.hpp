#pragma once

#include "ccs/compat.hpp"

namespace ccs {

// Folding of a simply-laced oriented diagram by a group of diagram
// automorphisms.  Supported: A_{2n-3} -> C_{n-1}, D_{n+1} -> B_n, D4 -> G2,
// E6 -> F4, and the identity folding of any type.
struct FoldingMap {
  DynkinType src, dst;
  Orientation src_orientation, dst_orientation;
  std::vector<std::vector<int>> group;  // all elements, as node permutations of src
  std::vector<int> nu_i;                // source node -> target node
  std::map<Label, Label> nu_pi;         // (t, j~) -> (t, nu(j~))
  ARWalkResult src_walk, dst_walk;

  std::vector<Label> fiber(const Label& target) const;
  std::vector<int> fiber_i(int target_node) const;
  Label act(const std::vector<int>& g, const Label& l) const { return {l.t, g[l.j]}; }
};

FoldingMap build_folding(const DynkinType& src, const DynkinType& dst);

struct FoldCheckItem {
  std::string name;
  bool pass;
  std::string detail;
};

struct FoldReport {
  std::vector<FoldCheckItem> items;
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

// The four folding identities (compat-degree invariance and summation,
// F-polynomial push-forward, dual g-vectors) plus the u-equation image check.
FoldReport check_folding_identities(const FoldingMap& fm, int jobs = 1);

}  // namespace ccs
