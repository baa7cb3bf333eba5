#pragma once

#include <optional>
#include <string>

#include "hodge/mhs.hpp"

namespace hodge {

/// Rational nilpotent endomorphism.
struct NilpotentOperator {
  Matrix matrix;
  unsigned nilpotency_index = 0;  // smallest k with N^k = 0

  /// Throws InputError unless square, rational and nilpotent.
  static NilpotentOperator create(Matrix m);
  size_t dim() const { return matrix.rows(); }
  bool preserves(const IncreasingFiltration& w) const;
};

/// The weight filtration of N centered at `center`:
/// M_k = sum_{j>=0} ker N^{j+1} ∩ im N^{j-k+center}, with im N^{<0} = V.
IncreasingFiltration weight_filtration_pure(const NilpotentOperator& n, int center);

struct RelativeWeightFiltration {
  bool exists = false;
  IncreasingFiltration filtration;  // meaningful only if exists
  std::string reason;               // why not, otherwise empty
};

/// Relative weight filtration M(N, W). Throws InputError if N does not preserve W.
RelativeWeightFiltration relative_weight_filtration(const NilpotentOperator& n,
                                                    const IncreasingFiltration& w);

/// Checks the defining axioms of M(N, W) directly. Returns an empty string on
/// success, otherwise the first violated axiom.
std::string check_relative_axioms(const NilpotentOperator& n, const IncreasingFiltration& w,
                                  const IncreasingFiltration& m);

struct LimitResult {
  IncreasingFiltration relative;
  ValidationReport report;
  std::optional<MixedHodgeStructure> mhs;  // set iff report.valid
};

/// (V, M(N, W), F0). Throws InputError if M(N, W) does not exist.
LimitResult limit_mhs(const DecreasingFiltration& f0, const NilpotentOperator& n,
                      const IncreasingFiltration& w);

}  // namespace hodge
