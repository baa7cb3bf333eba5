#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "hodge/domains.hpp"

using namespace hodge;
using namespace hodge::testing;

namespace {

PeriodDomainSpec kummer_spec() {
  auto w = kummer_weight();
  return PeriodDomainSpec::create(2, w, {{{0, 0}, 1}, {{-1, -1}, 1}}, unit_polarization(w));
}

PeriodDomainSpec elliptic_spec() {
  GradedPolarization q;
  q.forms.emplace(1, mat({{"0", "1"}, {"-1", "0"}}));
  return PeriodDomainSpec::create(2, IncreasingFiltration::pure(2, 1), {{{1, 0}, 1}, {{0, 1}, 1}}, q);
}

FundamentalSetDescriptor strip(const char* offset, const char* width, const char* sx = "0") {
  FundamentalSetDescriptor f;
  f.kind = FundamentalSetDescriptor::Kind::strip;
  f.strip.sx = parse_rational(sx);
  f.strip.offset = parse_rational(offset);
  f.strip.width = parse_rational(width);
  return f;
}

GroupAction translations(const char* period = "1") {
  GroupAction a;
  a.period = parse_rational(period);
  return a;
}

FundamentalSetDescriptor sl2_domain(const char* eps) {
  FundamentalSetDescriptor f;
  f.kind = FundamentalSetDescriptor::Kind::sl2;
  f.sl2.epsilon = parse_rational(eps);
  return f;
}

GroupAction modular() {
  GroupAction a;
  a.kind = GroupAction::Kind::sl2;
  return a;
}

std::vector<Rational> rats(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(parse_rational(x));
  return out;
}

GroupElement mod(long a, long b, long c, long d) { return {std::array<Integer, 4>{a, b, c, d}, {}}; }

// brute force: γ with small entries and a sampled witness inside F and γF
bool sampled_overlap(const std::array<Integer, 4>& m, double h, double r) {
  for (int i = 1; i < 200; ++i)
    for (int j = 1; j < 200; ++j) {
      double x = -h + 2 * h * i / 200.0, y = 0.5 + 2.0 * j / 200.0;
      std::complex<double> t(x, y);
      if (std::abs(t) <= r) continue;
      std::complex<double> u = (m[0].get_d() * t + m[1].get_d()) / (m[2].get_d() * t + m[3].get_d());
      if (std::abs(u.real()) < h && std::abs(u) > r) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("period domain membership") {
  auto spec = kummer_spec();
  SUBCASE("Kummer points lie in M, real ones in M_R") {
    for (const char* z : {"0", "3/2", "1+i", "-2/3+5i"}) {
      auto m = membership(spec, kummer(g(z)).hodge());
      CHECK(m.in_compact_dual);
      CHECK(m.in_M);
      CHECK(m.in_M_R == g(z).is_real());
    }
  }
  SUBCASE("F0 = <e1> drops a graded dimension") {
    auto f = DecreasingFiltration::create(2, {{-1, Subspace::full(2)}, {0, span(2, {unit_vector(2, 1)})}});
    auto m = membership(spec, f);
    CHECK_FALSE(m.in_compact_dual);
    CHECK_FALSE(m.in_M);
  }
  SUBCASE("elliptic points: in M iff Im tau > 0") {
    auto es = elliptic_spec();
    for (const char* t : {"i", "1/2+3i", "-4+1/7i"}) CHECK(membership(es, elliptic(g(t)).hodge()).in_M);
    for (const char* t : {"-i", "2-1/3i"}) {
      auto m = membership(es, elliptic(g(t)).hodge());
      CHECK(m.in_compact_dual);
      CHECK_FALSE(m.in_M);
    }
  }
  SUBCASE("rank mismatch") {
    CHECK_THROWS_AS(membership(spec, DecreasingFiltration::create(3, {{0, Subspace::full(3)}})), DimensionMismatch);
  }
  SUBCASE("inconsistent Hodge numbers") {
    auto w = kummer_weight();
    CHECK_THROWS_AS(PeriodDomainSpec::create(2, w, {{{0, 0}, 2}}, unit_polarization(w)), InputError);
  }
}

TEST_CASE("real split coordinates") {
  auto spec = kummer_spec();
  SUBCASE("K(x) has chart coordinate x and round-trips") {
    for (const char* x : {"0", "7/3", "-5"}) {
      auto f = kummer(g(x)).hodge();
      auto pt = real_split_coordinates(spec, f);
      auto c = chart_coordinates(pt.grading, spec.weight);
      REQUIRE(c.size() == 1);
      CHECK(c[0] == parse_rational(x));
      CHECK(assemble(pt, spec.weight) == f);
    }
  }
  SUBCASE("non-split points are rejected") {
    CHECK_THROWS_AS(real_split_coordinates(spec, kummer(g("1+i")).hodge()), InputError);
  }
  SUBCASE("pure input keeps itself and the scalar grading") {
    GradedPolarization q;
    q.forms.emplace(0, Matrix::identity(1));
    auto s = PeriodDomainSpec::create(1, IncreasingFiltration::pure(1, 0), {{{0, 0}, 1}}, q);
    auto f = DecreasingFiltration::create(1, {{0, Subspace::full(1)}});
    auto pt = real_split_coordinates(s, f);
    CHECK(pt.grading.matrix == Matrix(1, 1));
    CHECK(assemble(pt, s.weight) == f);
  }
  SUBCASE("round trip on delta-retracted structures") {
    for (const char* z : {"1/3+2i", "-1+i", "4-7/2i"}) {
      auto v = kummer(g(z));
      auto f = split_filtration(v, Retraction::delta);
      auto pt = real_split_coordinates(spec, f);
      CHECK(assemble(pt, spec.weight) == f);
    }
  }
}

TEST_CASE("fundamental sets for translations") {
  SUBCASE("width 1.2 strip is valid with overlaps -1, 0, 1") {
    auto r = verify_fundamental_set(strip("0", "1.2"), translations());
    CHECK(r.valid());
    CHECK(r.covering_status == "exact");
    std::vector<GroupElement> expected{{std::nullopt, {-1}}, {std::nullopt, {0}}, {std::nullopt, {1}}};
    CHECK(r.overlaps == expected);
  }
  SUBCASE("width 0.5 strip does not cover") {
    auto r = verify_fundamental_set(strip("0", "0.5"), translations());
    CHECK_FALSE(r.covering);
    CHECK_FALSE(r.valid());
  }
  SUBCASE("width exactly one misses a line") {
    CHECK_FALSE(verify_fundamental_set(strip("0", "1"), translations()).covering);
  }
  SUBCASE("wrong action kind") {
    CHECK_THROWS_AS(verify_fundamental_set(strip("0", "2"), modular()), UnsupportedError);
  }
  SUBCASE("finite-index refinement: union over cosets of 2Z") {
    auto f = strip("0", "1.2");
    auto u = coset_union(f.strip, parse_rational("1"), {0, 1});
    CHECK(u.width == parse_rational("2.2"));
    FundamentalSetDescriptor fu = f;
    fu.strip = u;
    CHECK(verify_fundamental_set(fu, translations("2")).valid());
    // a single translate is not enough for the subgroup
    CHECK_FALSE(verify_fundamental_set(f, translations("2")).valid());
    CHECK_THROWS_AS(coset_union(strip("0", "0.5").strip, parse_rational("1"), {0, 1}), InputError);
  }
}

TEST_CASE("SL2 thickened classical domain") {
  auto r = verify_fundamental_set(sl2_domain("1/100"), modular());
  CHECK(r.valid());
  std::vector<GroupElement> expected{mod(1, 0, 0, 1),  mod(1, 1, 0, 1),  mod(1, -1, 0, 1), mod(0, -1, 1, 0),
                                     mod(0, -1, 1, 1), mod(1, -1, 1, 0), mod(0, -1, 1, -1), mod(-1, -1, 1, 0),
                                     mod(-1, 0, 1, -1), mod(1, 0, 1, 1)};
  std::sort(expected.begin(), expected.end());
  CHECK(r.overlaps == expected);

  SUBCASE("every listed element has a sampled witness, others with small entries do not") {
    double h = 0.51, rad = 0.99;
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        for (long c = 0; c <= 2; ++c)
          for (long d = -2; d <= 2; ++d) {
            if (a * d - b * c != 1) continue;
            auto m = normalize_psl2({a, b, c, d});
            if (m != std::array<Integer, 4>{a, b, c, d}) continue;
            bool listed = std::find(expected.begin(), expected.end(), GroupElement{m, {}}) != expected.end();
            CHECK_MESSAGE(sampled_overlap(m, h, rad) == listed, a, " ", b, " ", c, " ", d);
          }
  }
  SUBCASE("epsilon 0 fails covering") { CHECK_FALSE(verify_fundamental_set(sl2_domain("0"), modular()).covering); }
  SUBCASE("large epsilon reaches the real axis") {
    CHECK_FALSE(verify_fundamental_set(sl2_domain("3/10"), modular()).finite_overlaps);
  }
}

TEST_CASE("unipotent reduction") {
  auto r = reduce_unipotent(rats({"3.7"}), {rats({"1"})});
  CHECK(r.gamma == IntVector{3});
  CHECK(r.reduced == rats({"0.7"}));
  r = reduce_unipotent(rats({"-0.2"}), {rats({"1"})});
  CHECK(r.gamma == IntVector{-1});
  CHECK(r.reduced == rats({"0.8"}));
  r = reduce_unipotent(rats({"2.5", "-3"}), {rats({"1", "0"}), rats({"0", "2"})});
  CHECK(r.gamma == IntVector{2, -2});
  CHECK(r.reduced == rats({"0.5", "1"}));
  CHECK_THROWS_AS(reduce_unipotent(rats({"1", "1"}), {rats({"1", "2"}), rats({"2", "4"})}), InputError);
  SUBCASE("non-diagonal lattice: reconstruction") {
    auto lat = std::vector<std::vector<Rational>>{rats({"1", "1"}), rats({"0", "3"})};
    auto x = rats({"7/2", "-11/3"});
    auto u = reduce_unipotent(x, lat);
    for (size_t i = 0; i < 2; ++i) {
      Rational back = u.reduced[i];
      for (size_t j = 0; j < 2; ++j) back += Rational(u.gamma[j]) * lat[j][i];
      CHECK(back == x[i]);
    }
  }
}

TEST_CASE("SL2 reduction") {
  auto r = reduce_sl2(g("3+2i"));
  CHECK(r.gamma == std::array<Integer, 4>{1, -3, 0, 1});
  CHECK(r.tau == g("2i"));
  r = reduce_sl2(g("i"));
  CHECK(r.gamma == std::array<Integer, 4>{1, 0, 0, 1});
  CHECK(r.tau == g("i"));
  r = reduce_sl2(g("1/2+1/2i"));
  CHECK(r.tau.norm() >= 1);
  CHECK(r.tau.re() <= Rational(1, 2));
  CHECK(r.tau.re() >= Rational(-1, 2));
  CHECK(act(r.gamma, g("1/2+1/2i")) == r.tau);
  SUBCASE("ties") {
    CHECK(reduce_sl2(g("1/2+2i")).tau == g("-1/2+2i"));
    auto arc = reduce_sl2(g("5/13+12/13i"));
    CHECK(arc.tau == g("-5/13+12/13i"));
  }
  SUBCASE("idempotent, and agrees with the float version") {
    for (const char* t : {"17/5+1/9i", "-7/3+1/100i", "1/7+1/7i", "100+1/3i"}) {
      auto a = reduce_sl2(g(t));
      CHECK(a.tau.norm() >= 1);
      CHECK(act(a.gamma, g(t)) == a.tau);
      auto again = reduce_sl2(a.tau);
      CHECK(again.gamma == std::array<Integer, 4>{1, 0, 0, 1});
      Gaussian gt = g(t);
      auto fl = reduce_sl2(std::complex<double>(gt.re().get_d(), gt.im().get_d()));
      CHECK(fl.tau.real() == doctest::Approx(a.tau.re().get_d()));
      CHECK(fl.tau.imag() == doctest::Approx(a.tau.im().get_d()));
    }
  }
  CHECK_THROWS_AS(reduce_sl2(g("1-i")), InputError);
}

TEST_CASE("identification in the quotient") {
  auto f = strip("0", "1.2");
  auto a = translations();
  auto overlaps = verify_fundamental_set(f, a).overlaps;
  auto pt = [](const char* z) { return DomainPoint{g(z), {}}; };
  CHECK(identify_in_quotient(pt("0.1"), pt("1.1"), f, a, overlaps));
  CHECK_FALSE(identify_in_quotient(pt("0.1"), pt("0.6"), f, a, overlaps));
  CHECK_THROWS_AS(identify_in_quotient(pt("0.1"), pt("3"), f, a, overlaps), InputError);

  SUBCASE("SL2 boundary") {
    auto fs = sl2_domain("1/100");
    auto ov = verify_fundamental_set(fs, modular()).overlaps;
    CHECK(identify_in_quotient(pt("-1/2+2i"), pt("1/2+2i"), fs, modular(), ov));
    CHECK(identify_in_quotient(pt("5/13+12/13i"), pt("-5/13+12/13i"), fs, modular(), ov));
    CHECK_FALSE(identify_in_quotient(pt("1/4+2i"), pt("-1/4+2i"), fs, modular(), ov));
  }
  SUBCASE("equivalence relation on sample points") {
    std::vector<const char*> zs{"0.05", "0.1", "1.05", "1.1", "0.6", "0.15+i", "1.15+i"};
    for (auto x : zs) {
      CHECK(identify_in_quotient(pt(x), pt(x), f, a, overlaps));
      for (auto y : zs) {
        bool xy = identify_in_quotient(pt(x), pt(y), f, a, overlaps);
        CHECK(xy == identify_in_quotient(pt(y), pt(x), f, a, overlaps));
        for (auto z : zs)
          if (xy && identify_in_quotient(pt(y), pt(z), f, a, overlaps))
            CHECK(identify_in_quotient(pt(x), pt(z), f, a, overlaps));
      }
    }
  }
}

TEST_CASE("definable structure comparison") {
  auto a = translations();
  auto r = same_definable_structure(strip("0", "1.2"), strip("0", "2.5"), a);
  CHECK(r.same);
  CHECK(r.translates_1_in_2 == 1);
  CHECK(r.translates_2_in_1 == 3);
  CHECK_FALSE(same_definable_structure(strip("0", "1.2"), strip("0", "1.2", "1"), a).same);
  CHECK(same_definable_structure(strip("0", "1.2"), strip("0", "1.2"), a).same);
  CHECK_THROWS_AS(same_definable_structure(strip("0", "0.5"), strip("0", "1.2"), a), InputError);
  CHECK_THROWS_AS(same_definable_structure(sl2_domain("1/100"), strip("0", "1.2"), a), UnsupportedError);
  SUBCASE("equivalence iff slopes agree") {
    std::vector<FundamentalSetDescriptor> fs{strip("0", "1.2"), strip("1/3", "3"), strip("0", "2", "1"),
                                             strip("-1", "1.5", "1"), strip("0", "1.1", "-2/3")};
    for (const auto& x : fs)
      for (const auto& y : fs)
        CHECK(same_definable_structure(x, y, a).same == (x.strip.slope() == y.strip.slope()));
  }
  SUBCASE("cover counts match a direct check") {
    // covering (0, 2.5) by (n, n + 1.2)
    int needed = 0;
    for (int n = -1; n <= 2; ++n)
      if (n + 1.2 > 0 && n < 2.5) ++needed;
    CHECK(needed == 4);  // all translates meeting it; greedy picks fewer
    CHECK(r.translates_2_in_1 < needed);
  }
}

TEST_CASE("product sets and pullback") {
  FundamentalSetDescriptor box;
  box.kind = FundamentalSetDescriptor::Kind::product;
  box.box = {rats({"-1/10"}), rats({"6/5"})};
  GroupAction lat;
  lat.kind = GroupAction::Kind::product;
  lat.lattice = {rats({"1"})};
  auto rb = verify_fundamental_set(box, lat);
  CHECK(rb.valid());
  CHECK(rb.overlaps.size() == 3);

  // forgetting delta sends K(z) to K(Re z); the preimage of the box is a vertical strip
  auto pulled = strip("-1/10", "6/5");
  CHECK(verify_fundamental_set(pulled, translations()).valid());
  auto spec = kummer_spec();
  for (const char* z : {"0", "1/2+3i", "1.05-2i", "-0.2+i", "1.1", "7/3+1/2i"}) {
    auto pt = real_split_coordinates(spec, split_filtration(kummer(g(z)), Retraction::delta));
    auto c = chart_coordinates(pt.grading, spec.weight);
    CHECK(in_region(box, {Gaussian(), c}) == in_region(pulled, {g(z), {}}));
  }

  SUBCASE("product with an SL2 factor") {
    FundamentalSetDescriptor p = box;
    p.graded = std::make_shared<FundamentalSetDescriptor>(sl2_domain("1/100"));
    GroupAction pa = lat;
    pa.graded = std::make_shared<GroupAction>(modular());
    auto r = verify_fundamental_set(p, pa);
    CHECK(r.valid());
    CHECK(r.overlaps.size() == 30);
  }
  SUBCASE("non-diagonal lattice is sampled") {
    FundamentalSetDescriptor p;
    p.kind = FundamentalSetDescriptor::Kind::product;
    p.box = {rats({"0", "0"}), rats({"2.1", "1.1"})};
    GroupAction pa;
    pa.kind = GroupAction::Kind::product;
    pa.lattice = {rats({"1", "0"}), rats({"1", "1"})};
    auto r = verify_fundamental_set(p, pa, 300);
    CHECK(r.covering);
    CHECK(r.covering_status == "sampled");
    p.box.width = rats({"0.5", "0.5"});
    CHECK_FALSE(verify_fundamental_set(p, pa, 300).covering);
  }
}
