#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodge/monodromy.hpp"
#include "hodge/splittings.hpp"

namespace hodge {

/// Coefficients in Q(i), constant term first.
using Polynomial = std::vector<Gaussian>;
using PolyVector = std::vector<Polynomial>;

Gaussian evaluate(const Polynomial& p, const Gaussian& q);
std::complex<double> evaluate(const Polynomial& p, std::complex<double> q);

/// One-variable local model over the punctured disc. F^p(q) is spanned by the
/// generators listed under every key >= p; below the lowest key F^p = V.
struct LocalModel1D {
  size_t rank = 0;
  IncreasingFiltration weight;
  GradedPolarization polarizations;
  NilpotentOperator n;
  std::map<int, std::vector<PolyVector>> psi;

  /// Validates shapes, N W ⊆ W, and that e^N is integral.
  static LocalModel1D create(size_t rank, IncreasingFiltration weight, GradedPolarization q,
                             NilpotentOperator n, std::map<int, std::vector<PolyVector>> psi);

  DecreasingFiltration psi_at(const Gaussian& q) const;
  unsigned degree() const;
};

/// exp((z + w) N) . Psi(q), where z is the caller's branch of log(q) / 2 pi i.
/// Throws InputError if q = 0 or Im z <= 0.
DecreasingFiltration evaluate_period_map(const LocalModel1D& m, const Gaussian& q,
                                         const Gaussian& branch, long winding = 0);

/// Float evaluation at z in H, converted exactly into dyadic rationals.
/// Throws NumericalOverflow on non-finite values.
DecreasingFiltration evaluate_period_map_float(const LocalModel1D& m, std::complex<double> z);

class NumericalOverflow : public InputError {
 public:
  using InputError::InputError;
};

struct AdmissibilityVerdict {
  bool cond1 = false;
  bool cond2 = false;
  std::string cond1_detail;
  std::vector<std::pair<int, int>> cond2_failures;  // (p, k)
  bool preadmissible() const { return cond1 && cond2; }
};

AdmissibilityVerdict check_preadmissible(const LocalModel1D& m);

/// N F^p ⊆ F^{p-1} for every p.
bool check_orbit_transversality(const DecreasingFiltration& f0, const NilpotentOperator& n);

struct VerticalStrip {
  Rational a, b, c;  // a < x < b, y > c
  static VerticalStrip create(Rational a, Rational b, Rational c);
};

struct ProbeOptions {
  size_t nx = 20;
  size_t ny = 20;
  double top = 0;  // top height of the ladder; 0 means 10 c
  Retraction retraction = Retraction::delta;
  unsigned workers = 1;
};

struct ProbeRow {
  double y = 0;
  double sup = 0;
  bool overflow = false;
  std::vector<std::vector<double>> coordinates;  // per grid x
};

struct ProbeReport {
  std::vector<double> xs;
  std::vector<ProbeRow> rows;  // increasing height
  bool divergent = false;
};

/// Heights form a geometric ladder from c to top; x points are cell midpoints.
/// Divergent: an overflow row, or the top three sups strictly increase and the
/// top sup exceeds 10 times the bottom sup.
ProbeReport strip_splitting_probe(const LocalModel1D& m, const VerticalStrip& s, const ProbeOptions& o);

}  // namespace hodge
