#pragma once

#include <optional>
#include <vector>

#include "hodge/domains.hpp"
#include "hodge/lattice.hpp"

namespace hodge {

struct HodgeClassQuery {
  MixedHodgeStructure mhs;
  Matrix q0;  // symmetric rational form on Gr_0, GradedPiece coordinates
  Rational bound;
};

struct HodgeClass {
  IntVector v;
  Rational norm;  // q0 of the Gr_0 image
};

/// Gram matrix of q0 on the Gr_0 images of a Hdg_0 basis.
Matrix hodge_class_gram(const MixedHodgeStructure& v, const Matrix& q0, const IntegerLattice& lattice);

/// Nonzero v in Hdg_0(V)_Z with q0(v, v) <= bound, sorted lexicographically.
/// Throws InputError if q0 is not positive definite on the class lattice.
std::vector<HodgeClass> enumerate_hdg0_d(const HodgeClassQuery& query);

struct LocusIndicator {
  bool nonempty = false;
  std::optional<HodgeClass> witness;  // least norm, first nonzero entry positive
};

/// F must lie in M; q0 is the weight-0 form of the spec.
LocusIndicator hdg_locus_indicator(const PeriodDomainSpec& spec, const DecreasingFiltration& f, const Rational& d);

}  // namespace hodge
