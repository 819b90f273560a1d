#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ccs {

// Cluster-variable index (t,j): sweep t in [0, r_j], vertex j in [0, n).
// Vertices are 0-based internally and 1-based in all rendered output.
struct Label {
  int32_t t = 0;
  int32_t j = 0;

  auto operator<=>(const Label&) const = default;

  std::string str() const {
    return "(" + std::to_string(t) + "," + std::to_string(j + 1) + ")";
  }
};

}  // namespace ccs
