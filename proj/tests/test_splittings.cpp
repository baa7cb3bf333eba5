#include "doctest.h"
#include "morphisms.hpp"
#include "oracles.hpp"
#include "hodge/splittings.hpp"

using namespace hodge;
using namespace hodge::testing;

TEST_CASE("kummer delta is y E") {
  auto v = kummer(g("3/2+5*i"));
  Matrix d = delta_splitting(v);
  CHECK(d == mat({{"0", "0"}, {"5", "0"}}));
  auto pt = delta_retract(v);
  CHECK(pt.grading.eigenspaces.at(0) == span(2, {vec({"1", "3/2"})}));
  CHECK(chart_coordinates(pt.grading, v.weight()) == std::vector<Rational>{Rational(3, 2)});
}

namespace {

Subspace matrix_span(const std::vector<Matrix>& ms, size_t n) {
  std::vector<Vector> flat;
  for (const auto& m : ms) flat.push_back(m.flatten());
  return Subspace::span(n * n, flat);
}

MixedHodgeStructure shifted(const MixedHodgeStructure& v, const Matrix& d, int sign) {
  Matrix e = (Gaussian(Rational(0), Rational(sign)) * d).exp_nilpotent();
  return v.with_hodge(v.hodge().transformed(e));
}

}  // namespace

TEST_CASE("kummer closed form") {
  RandomData r(21);
  for (int t = 0; t < 20; ++t) {
    Gaussian z(r.rational(), r.rational());
    Matrix e(2, 2);
    e(1, 0) = Gaussian(z.im());
    CHECK(delta_splitting(kummer(z)) == e);
    CHECK(chart_coordinates(delta_retract(kummer(z)).grading, kummer_weight()) == std::vector<Rational>{z.re()});
  }
}

TEST_CASE("delta: defining properties on random structures") {
  RandomData r(22);
  for (int t = 0; t < 40; ++t) {
    auto s = random_split(r, 5);
    auto v = random_twist(r, s);
    Matrix d = delta_splitting(v);
    CHECK(d.is_real());
    CHECK(in_l_minus1_minus1(deligne_bigrading(v), d));
    auto split = shifted(v, d, -1);
    CHECK(is_split_over_R(split));
    size_t n = v.rank();
    CHECK(matrix_span(l_minus1_minus1(v), n) == matrix_span(l_minus1_minus1(split), n));
    CHECK(delta_splitting(split).is_zero());
    CHECK(delta_splitting(s.v).is_zero());
  }
}

TEST_CASE("delta is the unique grid solution") {
  RandomData r(23);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 25; ++t) {
    auto s = random_split(r, 3);
    auto basis = real_l_basis(deligne_bigrading(s.v));
    if (basis.empty() || basis.size() > 3) continue;
    Matrix d0(s.v.rank(), s.v.rank());
    for (const auto& x : basis) d0 += Gaussian(Rational(r.integer(-2, 2)) / 2) * x;
    auto v = shifted(s.v, d0, 1);
    CHECK(delta_splitting(v) == d0);
    auto hits = delta_grid_search(v, real_l_basis(deligne_bigrading(v)), 2);
    REQUIRE(hits.size() == 1);
    CHECK(hits.front() == d0);
    ++checked;
  }
  CHECK(checked == 25);
}

TEST_CASE("unipotent transport") {
  RandomData r(24);
  for (int t = 0; t < 30; ++t) {
    auto s = random_split(r, 5);
    auto t1 = deligne_grading(random_twist(r, s));
    auto t2 = deligne_grading(random_twist(r, s));
    auto t3 = standard_grading(s.v.weight());
    Matrix u12 = unipotent_transport(t1, t2), u23 = unipotent_transport(t2, t3);
    CHECK(u12 * t1.matrix * u12.inverse() == t2.matrix);
    CHECK(unipotent_transport(t1, t3) == u23 * u12);
    CHECK(unipotent_transport(t1, t1) == Matrix::identity(s.v.rank()));
  }
}

TEST_CASE("retractions are the identity on split points") {
  RandomData r(25);
  for (int t = 0; t < 30; ++t) {
    auto s = random_split(r, 6);
    for (auto mode : {Retraction::delta, Retraction::sl2}) {
      CHECK(split_filtration(s.v, mode) == s.v.hodge());
      auto pt = retract(s.v, mode);
      CHECK(assemble(pt, s.v.weight()) == s.v.hodge());
      CHECK(pt.grading.matrix == deligne_grading(s.v).matrix);
    }
    CHECK(sl2_zeta(s.v).is_zero());
  }
}

TEST_CASE("sl2 splitting: real, split, equal to delta at depth two") {
  RandomData r(26);
  for (int t = 0; t < 30; ++t) {
    auto v = random_twist(r, random_split(r, 5));
    CHECK(sl2_zeta(v).is_real());
    auto f = split_filtration(v, Retraction::sl2);
    auto sv = v.with_hodge(f);
    CHECK(is_split_over_R(sv));
    CHECK(retract(sv, Retraction::sl2).grading.matrix == deligne_grading(sv).matrix);
    auto narrow = random_twist(r, random_split(r, 5, -1, 0));
    CHECK(split_filtration(narrow, Retraction::sl2) == split_filtration(narrow, Retraction::delta));
  }
}

TEST_CASE("retractions are functorial") {
  for (const auto& f : fixture_morphisms()) {
    CHECK(f.matrix * delta_splitting(f.source) == delta_splitting(f.target) * f.matrix);
    CHECK(f.matrix * sl2_zeta(f.source) == sl2_zeta(f.target) * f.matrix);
    for (auto mode : {Retraction::delta, Retraction::sl2}) {
      auto a = split_filtration(f.source, mode), b = split_filtration(f.target, mode);
      for (const auto& [p, sp] : a.jumps()) CHECK(b.at(p).contains(sp.image(f.matrix)));
      auto ta = retract(f.source, mode).grading, tb = retract(f.target, mode).grading;
      CHECK(f.matrix * ta.matrix == tb.matrix * f.matrix);
    }
  }
}
