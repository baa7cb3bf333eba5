#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodge/mhs.hpp"

namespace hodge {

/// Semisimple T with integer eigenvalues; eigenspace l is V_l.
struct GradingOperator {
  Matrix matrix;
  std::map<int, Subspace> eigenspaces;

  /// Throws InputError unless the spaces form a direct sum decomposition.
  static GradingOperator from_eigenspaces(size_t n, std::map<int, Subspace> spaces);

  size_t dim() const { return matrix.rows(); }
  bool is_real() const { return matrix.is_real(); }
  /// W_l = sum of the eigenspaces with eigenvalue <= l, for every l.
  bool splits(const IncreasingFiltration& w) const;
  /// The filtration this grading splits.
  IncreasingFiltration weight_filtration() const;
  /// Projection onto V_l along the other eigenspaces.
  Matrix projection(int l) const;
};

/// l-eigenspace = sum of J^{p,q} with p + q = l.
GradingOperator grading_from_bigrading(const Bigrading& b);
GradingOperator deligne_grading(const MixedHodgeStructure& v);
/// Rational grading from the graded lifts of W's echelon bases.
GradingOperator standard_grading(const IncreasingFiltration& w);

/// Basis of W_{-depth} End(V): X with X W_k ⊆ W_{k-depth}.
std::vector<Matrix> lowering_operators(const IncreasingFiltration& w, int depth = 1);

/// Basis of L^{-1,-1}: X(J^{p,q}) ⊆ sum of J^{r,s} with r < p, s < q.
std::vector<Matrix> l_minus1_minus1(const Bigrading& b);
std::vector<Matrix> l_minus1_minus1(const MixedHodgeStructure& v);
bool in_l_minus1_minus1(const Bigrading& b, const Matrix& x);

/// Component X^{a,b} of X: the part mapping J^{r,s} into J^{r+a,s+b}.
Matrix hodge_component(const Bigrading& b, const Matrix& x, int a, int c);

/// The unique u in exp(W_{-1}End) with u T u^{-1} = T'. Both must split the same W.
Matrix unipotent_transport(const GradingOperator& t, const GradingOperator& t2);

/// Deligne's δ: real, in L^{-1,-1}, with e^{-iδ}F split over R.
Matrix delta_splitting(const MixedHodgeStructure& v);

enum class Retraction { delta, sl2 };
Retraction parse_retraction(const std::string& name);
std::string to_string(Retraction r);

/// ζ of the sl2 splitting, as a real matrix; F_sl2 = e^{ζ} e^{-iδ} F.
Matrix sl2_zeta(const MixedHodgeStructure& v);

/// Hodge filtration of the real-split structure selected by `r`.
DecreasingFiltration split_filtration(const MixedHodgeStructure& v, Retraction r);

/// A point of M_R as (Gr-point, real grading).
struct RealSplitPoint {
  std::map<int, DecreasingFiltration> graded;  // per nonzero Gr_k, GradedPiece coordinates
  GradingOperator grading;
};

RealSplitPoint retract(const MixedHodgeStructure& v, Retraction r);
inline RealSplitPoint delta_retract(const MixedHodgeStructure& v) { return retract(v, Retraction::delta); }
inline RealSplitPoint sl2_retract(const MixedHodgeStructure& v) { return retract(v, Retraction::sl2); }

/// Split point of an MHS already split over R (no retraction applied).
RealSplitPoint split_point(const MixedHodgeStructure& v);
/// Inverse of split_point: F^p = sum over l of the lift of F^p(Gr_l) into V_l.
DecreasingFiltration assemble(const RealSplitPoint& point, const IncreasingFiltration& w);

/// Coordinates of log(unipotent_transport(standard_grading(w), t)) in the
/// echelon basis of W_{-1}End. Real for real t.
std::vector<Rational> chart_coordinates(const GradingOperator& t, const IncreasingFiltration& w);

}  // namespace hodge
