#pragma once

#include <vector>

#include "hodge/matrix.hpp"

namespace hodge {

/// Subspace of Q(i)^n stored by its reduced row echelon basis, so two
/// subspaces are equal exactly when their stored bases are equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(size_t ambient);
  static Subspace full(size_t ambient);
  /// Span of the given vectors (which may be dependent).
  static Subspace span(size_t ambient, const std::vector<Vector>& vectors);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  std::vector<Vector> vectors() const { return basis_.row_vectors(); }

  /// True iff the basis has rational entries (equivalently, conj-stable).
  bool is_real() const { return basis_.is_real(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// v minus its components along the pivot columns; zero iff v is in the span.
  Vector reduce(const Vector& v) const;

  /// Coordinates of v in the stored basis; throws if v is not in the span.
  Vector coordinates(const Vector& v) const;

  /// {a : a . v = 0 for all v in this} under the bilinear pairing.
  Subspace annihilator() const;

  /// Image under a linear map acting on column vectors.
  Subspace image(const Matrix& m) const;
  /// {v : m v in target}.
  static Subspace preimage(const Matrix& m, const Subspace& target);

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Subspace(size_t ambient, Matrix basis, std::vector<size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  size_t ambient_ = 0;
  Matrix basis_;
  std::vector<size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace conjugate(const Subspace& a);

/// Image of `a` in ambient/modulo. Quotient coordinates are the ambient
/// coordinates at the non-pivot columns of `modulo`, read after reducing
/// by `modulo`'s echelon basis.
Subspace quotient_image(const Subspace& a, const Subspace& modulo);

/// The columns that carry quotient coordinates for ambient/modulo.
std::vector<size_t> complement_columns(const Subspace& modulo);

/// True iff a + b is the whole space and a, b meet in zero.
bool complementary(const Subspace& a, const Subspace& b);

}  // namespace hodge
