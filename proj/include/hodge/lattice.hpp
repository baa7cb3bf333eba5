#pragma once

#include <vector>

#include "hodge/gaussian.hpp"

namespace hodge {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row-major

/// Sublattice of Z^n given by a basis in row Hermite normal form: positive
/// pivots, entries above each pivot reduced into [0, pivot).
class IntegerLattice {
 public:
  IntegerLattice() = default;
  /// Basis rows must be linearly independent; they are brought into HNF.
  IntegerLattice(size_t ambient, const IntMatrix& generators);

  size_t ambient_dim() const { return ambient_; }
  size_t rank() const { return basis_.size(); }
  const IntMatrix& basis() const { return basis_; }
  bool contains(const IntVector& v) const;

  friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;

 private:
  size_t ambient_ = 0;
  IntMatrix basis_;
};

/// Row Hermite normal form of the row span of `m` (zero rows dropped).
IntMatrix hermite_normal_form(IntMatrix m, size_t cols);

/// Diagonal of the Smith normal form (nonzero invariant factors only).
std::vector<Integer> smith_invariants(IntMatrix m, size_t cols);

/// All v in Z^cols with m v = 0. The result is saturated: it equals the
/// rational kernel intersected with Z^cols.
IntegerLattice integer_kernel(const IntMatrix& m, size_t cols);

/// Multiplies each row of a rational matrix by the lcm of its denominators.
IntMatrix clear_denominators(const std::vector<std::vector<Rational>>& rows);

}  // namespace hodge
