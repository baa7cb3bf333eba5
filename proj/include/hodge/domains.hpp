#pragma once

#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hodge/splittings.hpp"

namespace hodge {

struct PeriodDomainSpec {
  size_t rank = 0;
  IncreasingFiltration weight;
  HodgeNumbers hodge_numbers;
  GradedPolarization polarizations;

  /// Checks sum_{p+q=k} h^{p,q} = dim Gr_k and that every nonzero Gr_k has a form.
  static PeriodDomainSpec create(size_t rank, IncreasingFiltration weight, HodgeNumbers h,
                                 GradedPolarization q);
};

struct Membership {
  bool in_compact_dual = false;
  bool in_M = false;
  bool in_M_R = false;
  std::string detail;  // first failed condition, empty if in_M_R
};

Membership membership(const PeriodDomainSpec& spec, const DecreasingFiltration& f);

/// (Gr-point, real grading) of a point of M_R; throws InputError otherwise.
RealSplitPoint real_split_coordinates(const PeriodDomainSpec& spec, const DecreasingFiltration& f);

// ---- fundamental sets -------------------------------------------------------

/// offset < x - (sx/sy) y < offset + width, and y > floor when a floor is set.
struct StripDescriptor {
  Rational sx = 0, sy = 1;
  Rational offset = 0, width = 1;
  std::optional<Rational> floor;
  Rational slope() const { return sx / sy; }
};

/// |Re τ| < 1/2 + ε, |τ| > 1 - ε in the upper half plane.
struct Sl2Descriptor {
  Rational epsilon;
};

struct BoxDescriptor {
  std::vector<Rational> lower;
  std::vector<Rational> width;  // open box lower < t < lower + width
};

struct FundamentalSetDescriptor {
  enum class Kind { strip, sl2, product } kind = Kind::strip;
  StripDescriptor strip;
  Sl2Descriptor sl2;
  // product: optional graded factor (strip or sl2) times a box in the chart
  std::shared_ptr<FundamentalSetDescriptor> graded;
  BoxDescriptor box;
};

/// Group actions with rational data.
struct GroupAction {
  enum class Kind { translation, sl2, product } kind = Kind::translation;
  Rational period = 1;                          // translation: z -> z + n period
  std::shared_ptr<GroupAction> graded;          // product
  std::vector<std::vector<Rational>> lattice;   // product: basis rows of the chart lattice
};

/// Element of the acting group. `modular` is normalized in PSL2 (c > 0, or c = 0 and d > 0).
struct GroupElement {
  std::optional<std::array<Integer, 4>> modular;  // a, b, c, d
  IntVector translation;                          // graded translation (size 1) or lattice part
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    auto key = [](const GroupElement& g) {
      std::vector<Integer> k;
      if (g.modular) k.insert(k.end(), g.modular->begin(), g.modular->end());
      k.insert(k.end(), g.translation.begin(), g.translation.end());
      return k;
    };
    return key(a) <=> key(b);
  }
};

std::array<Integer, 4> normalize_psl2(std::array<Integer, 4> m);

struct FundamentalSetReport {
  bool covering = false;
  std::string covering_status;  // "exact" or "sampled"
  bool finite_overlaps = false;
  std::string overlap_status;   // "exact" or "undecided"
  std::vector<GroupElement> overlaps;
  std::string detail;
  bool valid() const { return covering && finite_overlaps && overlap_status == "exact"; }
};

FundamentalSetReport verify_fundamental_set(const FundamentalSetDescriptor& f, const GroupAction& a,
                                            size_t sample_budget = 2000);

/// Union of the translates of a strip by the coset representatives (multiples of the
/// period); throws InputError unless the union is a single strip.
StripDescriptor coset_union(const StripDescriptor& s, const Rational& period, const std::vector<long>& cosets);

// ---- reductions -----------------------------------------------------------

struct UnipotentReduction {
  IntVector gamma;
  std::vector<Rational> reduced;  // in the half-open box sum t_i b_i, 0 <= t_i < 1
};

UnipotentReduction reduce_unipotent(const std::vector<Rational>& coord,
                                    const std::vector<std::vector<Rational>>& lattice);

struct Sl2Reduction {
  std::array<Integer, 4> gamma;  // a, b, c, d with tau' = (a tau + b) / (c tau + d)
  Gaussian tau;
};

/// |Re τ'| <= 1/2, |τ'| >= 1; ties go to Re = -1/2 and to the left half of the arc.
Sl2Reduction reduce_sl2(const Gaussian& tau);

struct Sl2ReductionFloat {
  std::array<long long, 4> gamma;
  std::complex<double> tau;
};
Sl2ReductionFloat reduce_sl2(std::complex<double> tau);

Gaussian act(const std::array<Integer, 4>& m, const Gaussian& tau);

// ---- quotient relation ------------------------------------------------------

struct DomainPoint {
  Gaussian z;                 // point of the graded factor (strip or sl2)
  std::vector<Rational> chart;  // product only
};

/// True iff some overlap element maps p1 to p2. Both points must lie in the closure of F.
bool identify_in_quotient(const DomainPoint& p1, const DomainPoint& p2, const FundamentalSetDescriptor& f,
                          const GroupAction& a, const std::vector<GroupElement>& overlaps);

bool in_closure(const FundamentalSetDescriptor& f, const DomainPoint& p);
bool in_region(const FundamentalSetDescriptor& f, const DomainPoint& p);

struct DefinableComparison {
  bool same = false;
  long translates_1_in_2 = -1;  // translates of F2 needed to cover F1; -1 if impossible
  long translates_2_in_1 = -1;
};

/// Strip descriptors under a translation action only.
DefinableComparison same_definable_structure(const FundamentalSetDescriptor& f1,
                                             const FundamentalSetDescriptor& f2, const GroupAction& a);

}  // namespace hodge
