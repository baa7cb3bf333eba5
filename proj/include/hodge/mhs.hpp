#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hodge/errors.hpp"
#include "hodge/filtration.hpp"
#include "hodge/lattice.hpp"

namespace hodge {

/// Raised when data is well formed but does not satisfy the MHS axioms.
class NotMixedHodgeStructure : public InputError {
 public:
  using InputError::InputError;
};

struct ValidationReport {
  struct OpposednessFailure {
    int weight;  // l
    int p;       // F^p and conj(F^{l+1-p}) are not complementary on Gr_l
  };
  struct TripleFailure {
    int weight;
    int p;
    int q;  // Gr_F^p Gr_Fbar^q Gr_l is nonzero although p + q != l
  };
  bool valid = true;
  bool thorough = false;
  std::vector<OpposednessFailure> failures;
  std::vector<TripleFailure> triple_failures;
};

/// Checks that F induces a pure Hodge structure of weight l on every Gr_l^W.
/// Structural problems (mismatched dimensions, a weight step without a
/// rational basis) throw InputError. With `thorough`, the triple-graded
/// vanishing is checked as well and both verdicts must agree.
ValidationReport validate_mhs(size_t rank, const IncreasingFiltration& weight,
                              const DecreasingFiltration& hodge, bool thorough = false);

/// Integral lattice Z^rank with a rational weight filtration and a Hodge
/// filtration over Q(i). Always valid once constructed.
class MixedHodgeStructure {
 public:
  static MixedHodgeStructure create(IncreasingFiltration weight, DecreasingFiltration hodge);

  size_t rank() const { return weight_.ambient_dim(); }
  const IncreasingFiltration& weight() const { return weight_; }
  const DecreasingFiltration& hodge() const { return hodge_; }

  bool is_pure() const { return weight_.jumps().size() <= 1; }
  /// Throws InputError unless pure.
  int pure_weight() const;

  /// Same weight filtration, new Hodge filtration (validated).
  MixedHodgeStructure with_hodge(DecreasingFiltration hodge) const;

 private:
  MixedHodgeStructure(IncreasingFiltration w, DecreasingFiltration f)
      : weight_(std::move(w)), hodge_(std::move(f)) {}

  IncreasingFiltration weight_;
  DecreasingFiltration hodge_;
};

using Bidegree = std::pair<int, int>;

/// Decomposition of V_C into pieces J^{p,q}; only nonzero pieces are stored.
struct Bigrading {
  size_t ambient = 0;
  std::map<Bidegree, Subspace> pieces;

  Subspace piece(int p, int q) const;
  /// Sum of the pieces whose bidegree satisfies `pred`.
  template <class Pred>
  Subspace span_where(Pred pred) const {
    Subspace s = Subspace::zero(ambient);
    for (const auto& [pq, sp] : pieces)
      if (pred(pq.first, pq.second)) s = sum(s, sp);
    return s;
  }
  /// Columns: the bases of the pieces in bidegree order.
  Matrix adapted_basis() const;
  /// Bidegree of each column of adapted_basis().
  std::vector<Bidegree> adapted_degrees() const;
};

/// Deligne's bigrading I^{p,q}, computed by the closed intersection formula.
Bigrading deligne_bigrading(const MixedHodgeStructure& v);

/// Direct sum, compatibility with F and W.
bool is_bigrading_of(const Bigrading& b, const MixedHodgeStructure& v);
/// I^{p,q} = conj(I^{q,p}) modulo the sum of I^{r,s} with r < p, s < q.
bool satisfies_deligne_congruence(const Bigrading& b);

/// I^{p,q} = conj(I^{q,p}) exactly.
bool is_split_over_R(const MixedHodgeStructure& v);

using HodgeNumbers = std::map<Bidegree, size_t>;
HodgeNumbers hodge_numbers(const MixedHodgeStructure& v);

/// Weil operator of a pure Hodge structure given by its filtration on C^dim.
Matrix weil_operator(size_t dim, int weight, const DecreasingFiltration& f);
/// Weil operator of a pure MHS; throws InputError unless pure.
Matrix weil_operator(const MixedHodgeStructure& v);

/// Per weight k, a rational form on Gr_k^W written in the GradedPiece basis.
struct GradedPolarization {
  std::map<int, Matrix> forms;
};

struct PolarizationReport {
  struct Issue {
    int weight;
    std::string problem;
  };
  bool polarized = true;
  std::vector<Issue> issues;
};

/// Sign convention: h(u, v) = q(C u, conj v) must be positive definite. With
/// it, Q(1) is polarized by q = (1) and C = id on type (-1,-1).
PolarizationReport check_graded_polarization(const MixedHodgeStructure& v,
                                             const GradedPolarization& q);
/// Single pure piece on C^dim.
PolarizationReport check_polarization(size_t dim, int weight, const DecreasingFiltration& f,
                                      const Matrix& form);

MixedHodgeStructure tensor(const MixedHodgeStructure& a, const MixedHodgeStructure& b);
MixedHodgeStructure dual(const MixedHodgeStructure& v);
/// Hom(a, b) on matrices X, flattened as index j * rank(b) + i for entry (i, j)
/// (the ordering of dual(a) ⊗ b). W_k = {X : X W_l ⊆ W_{l+k}}, F^p likewise.
MixedHodgeStructure hom(const MixedHodgeStructure& a, const MixedHodgeStructure& b);
/// Tate structure Z(n): rank 1, weight -2n, type (-n,-n).
MixedHodgeStructure tate(int n);

/// {X : X maps each source[k] into target[k]}, X flattened row-major.
Subspace operators_mapping(size_t rows, size_t cols,
                           const std::vector<std::pair<Subspace, Subspace>>& constraints);

struct MhsMorphism {
  MixedHodgeStructure source;
  MixedHodgeStructure target;
  Matrix matrix;  // rank(target) x rank(source), rational
};

struct MorphismReport {
  bool ok = true;
  std::vector<std::string> failures;
};

MorphismReport check_morphism(const MhsMorphism& f);
/// f(V) ∩ W_k = f(W_k) and f(V_C) ∩ F^p = f(F^p) for every k, p.
MorphismReport strictness_check(const MhsMorphism& f);

/// Hdg_0(V)_Z = (W_0)_Z ∩ F^0, as a saturated sublattice of Z^rank.
IntegerLattice hodge_classes(const MixedHodgeStructure& v);

}  // namespace hodge
