#pragma once

#include <map>
#include <vector>

#include "hodge/subspace.hpp"

namespace hodge {

/// Finite increasing filtration stored by its jumps. at(k) is the space of the
/// largest stored index <= k (zero below the first); the last stored space is
/// the whole ambient space.
class IncreasingFiltration {
 public:
  IncreasingFiltration() = default;

  /// Validates nesting and normalizes: repeated steps are dropped and a full
  /// step is appended after the last given index when missing.
  static IncreasingFiltration create(size_t ambient, std::map<int, Subspace> steps);
  /// Pure filtration: zero below `weight`, everything from `weight` on.
  static IncreasingFiltration pure(size_t ambient, int weight);

  size_t ambient_dim() const { return ambient_; }
  Subspace at(int k) const;
  const std::map<int, Subspace>& jumps() const { return steps_; }
  /// Indices k with Gr_k nonzero, ascending.
  std::vector<int> graded_indices() const;
  int lowest() const;
  int highest() const;
  bool is_real() const;

  friend bool operator==(const IncreasingFiltration&, const IncreasingFiltration&) = default;

 private:
  size_t ambient_ = 0;
  std::map<int, Subspace> steps_;
};

/// Finite decreasing filtration stored by its jumps. at(p) is the space of the
/// smallest stored index >= p (zero above the last); the first stored space is
/// the whole ambient space.
class DecreasingFiltration {
 public:
  DecreasingFiltration() = default;

  /// Validates nesting and normalizes: repeated steps are dropped and a full
  /// step is prepended before the first given index when missing.
  static DecreasingFiltration create(size_t ambient, std::map<int, Subspace> steps);

  size_t ambient_dim() const { return ambient_; }
  Subspace at(int p) const;
  const std::map<int, Subspace>& jumps() const { return steps_; }
  int lowest() const;
  int highest() const;

  DecreasingFiltration conjugate() const;
  /// Image of every step under an invertible map.
  DecreasingFiltration transformed(const Matrix& g) const;

  friend bool operator==(const DecreasingFiltration&, const DecreasingFiltration&) = default;

 private:
  size_t ambient_ = 0;
  std::map<int, Subspace> steps_;
};

/// Gr_k^W = W_k / W_{k-1} with a fixed basis: the rows of W_k's echelon basis
/// whose pivots are not pivots of W_{k-1}. Coordinates of v in W_k are the
/// entries of (v reduced by W_{k-1}) at those pivot columns.
class GradedPiece {
 public:
  GradedPiece(const IncreasingFiltration& w, int k);

  int index() const { return index_; }
  size_t dim() const { return columns_.size(); }
  const Subspace& lower() const { return lower_; }
  const Subspace& upper() const { return upper_; }
  /// Basis vectors of the chosen lift of Gr_k into W_k.
  const std::vector<Vector>& lift_basis() const { return lifts_; }

  Vector coords(const Vector& v) const;
  Vector lift(const Vector& c) const;
  /// Image of s ∩ W_k in Gr_k coordinates.
  Subspace induced(const Subspace& s) const;
  DecreasingFiltration induced(const DecreasingFiltration& f) const;
  IncreasingFiltration induced(const IncreasingFiltration& m) const;
  /// Map induced on Gr_k by an endomorphism preserving W.
  Matrix induced_map(const Matrix& m) const;

 private:
  int index_;
  Subspace lower_;
  Subspace upper_;
  std::vector<size_t> columns_;
  std::vector<Vector> lifts_;
};

}  // namespace hodge
