#pragma once

#include <stdexcept>
#include <string>

namespace ccs {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// add/mul on polynomials over different variable lists.
struct VariableMismatch : Error {
  using Error::Error;
};

// divide_exact found no exact quotient.  During seed mutation this means the
// implementation is broken, never that the input is bad.
struct NonExactDivision : Error {
  using Error::Error;
};

// Evaluation at a point where a negative exponent has no inverse.
struct NonInvertible : Error {
  using Error::Error;
};

// g-vector requested for a non-homogeneous expansion (bug signal).
struct NonHomogeneous : Error {
  using Error::Error;
};

// Closed-form point count queried at a characteristic the formula excludes.
struct ExcludedCharacteristic : Error {
  using Error::Error;
};

// Brute-force domain too large.
struct InfeasibleSize : Error {
  using Error::Error;
};

// Internal invariant broken (walk non-termination, label clash, ...).
struct InternalError : Error {
  using Error::Error;
};

struct UnsupportedType : Error {
  using Error::Error;
};

}  // namespace ccs
