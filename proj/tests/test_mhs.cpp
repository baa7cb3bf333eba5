#include "doctest.h"
#include "morphisms.hpp"
#include "oracles.hpp"

using namespace hodge;
using namespace hodge::testing;

TEST_CASE("validation") {
  for (const char* z : {"0", "i", "2+3i", "-7/5-1/2i"}) CHECK(validate_mhs(2, kummer_weight(), kummer(g(z)).hodge(), true).valid);
  auto pure1 = IncreasingFiltration::pure(2, 1);
  auto ell = DecreasingFiltration::create(2, {{1, span(2, {vec({"1", "i"})})}});
  CHECK(validate_mhs(2, pure1, ell).valid);
  auto real_line = DecreasingFiltration::create(2, {{1, span(2, {vec({"1", "1"})})}});
  auto bad = validate_mhs(2, pure1, real_line, true);
  CHECK_FALSE(bad.valid);
  REQUIRE_FALSE(bad.failures.empty());
  CHECK(bad.failures.front().weight == 1);
  CHECK_FALSE(bad.triple_failures.empty());
  CHECK_THROWS_AS(validate_mhs(3, pure1, ell), InputError);
  CHECK_THROWS_AS(MixedHodgeStructure::create(pure1, real_line), NotMixedHodgeStructure);
  auto complex_w = IncreasingFiltration::create(2, {{0, span(2, {vec({"1", "i"})})}, {1, Subspace::full(2)}});
  CHECK_THROWS_AS(validate_mhs(2, complex_w, ell), InputError);
}

TEST_CASE("both validation formulations agree") {
  RandomData r(11);
  for (int t = 0; t < 60; ++t) {
    size_t n = static_cast<size_t>(r.integer(1, 4));
    auto s = random_split(r, n);
    // random filtrations with the right shape, mostly not MHS
    std::map<int, Subspace> f;
    size_t d = s.v.rank();
    f[0] = r.subspace(d, d / 2 + 1);
    f[1] = intersect(f[0], r.subspace(d, d / 2 + 1));
    f[-1] = Subspace::full(d);
    auto fil = DecreasingFiltration::create(d, f);
    auto rep = validate_mhs(d, s.v.weight(), fil, true);
    CHECK(rep.valid == rep.triple_failures.empty());
    CHECK(rep.valid == rep.failures.empty());
    auto twisted = random_twist(r, s);
    CHECK(validate_mhs(d, twisted.weight(), twisted.hodge(), true).valid);
  }
}

TEST_CASE("Deligne bigrading examples") {
  auto b = deligne_bigrading(kummer(g("i")));
  CHECK(b.piece(0, 0) == span(2, {vec({"1", "i"})}));
  CHECK(b.piece(-1, -1) == span(2, {unit_vector(2, 1)}));
  CHECK(b.pieces.size() == 2);
  SUBCASE("split inputs: I^{p,q} = F^p ∩ conj F^q ∩ W_{p+q}") {
    RandomData r(12);
    for (int t = 0; t < 30; ++t) {
      auto s = random_split(r, 5);
      auto bb = deligne_bigrading(s.v);
      auto fb = s.v.hodge().conjugate();
      for (const auto& [pq, sp] : bb.pieces)
        CHECK(sp == intersect(intersect(s.v.hodge().at(pq.first), fb.at(pq.second)), s.v.weight().at(pq.first + pq.second)));
      CHECK(is_split_over_R(s.v));
    }
  }
  SUBCASE("pure: classical Hodge decomposition") {
    auto e = elliptic(g("1/2+2i"));
    auto eb = deligne_bigrading(e);
    CHECK(eb.piece(1, 0) == span(2, {vec({"1", "1/2+2i"})}));
    CHECK(eb.piece(0, 1) == span(2, {vec({"1", "1/2-2i"})}));
  }
}

TEST_CASE("bigrading agrees with the congruence oracle") {
  RandomData r(13);
  for (int t = 0; t < 40; ++t) {
    auto s = random_split(r, 4);
    auto v = random_twist(r, s);
    auto b = deligne_bigrading(v);
    CHECK(is_bigrading_of(b, v));
    CHECK(satisfies_deligne_congruence(b));
    bool unique = false;
    auto o = bigrading_oracle(v, unique);
    CHECK(unique);
    CHECK(o.pieces == b.pieces);
  }
}

TEST_CASE("Hodge numbers") {
  auto h = hodge_numbers(kummer(g("i")));
  CHECK(h == HodgeNumbers{{{-1, -1}, 1}, {{0, 0}, 1}});
  RandomData r(14);
  for (int t = 0; t < 20; ++t) {
    auto s = random_split(r, 6);
    auto hh = hodge_numbers(random_twist(r, s));
    size_t total = 0;
    for (const auto& [pq, n] : hh) {
      total += n;
      CHECK(hh[{pq.second, pq.first}] == n);
    }
    CHECK(total == s.v.rank());
  }
}

TEST_CASE("Weil operator") {
  // i on e0 + i e1, -i on e0 - i e1: C e0 = -e1, C e1 = e0
  CHECK(weil_operator(elliptic(g("i"))) == mat({{"0", "1"}, {"-1", "0"}}));
  CHECK(weil_operator(tate(0)) == Matrix::identity(1));
  CHECK(weil_operator(tate(1)) == Matrix::identity(1));
  CHECK_THROWS_AS(weil_operator(kummer(g("i"))), InputError);
  RandomData r(15);
  for (int t = 0; t < 20; ++t) {
    Gaussian tau(r.rational(), Rational(r.integer(1, 3)));
    Matrix c = weil_operator(elliptic(tau));
    CHECK(c.is_real());
    CHECK(c * c == Gaussian(-1) * Matrix::identity(2));
  }
  for (int t = 0; t < 10; ++t) {
    auto s = random_split(r, 4, 0, 0);
    CHECK(weil_operator(s.v) == Matrix::identity(s.v.rank()));
  }
  // C commutes with endomorphisms of the pure structure
  auto e = elliptic(g("i"));
  Matrix rot = mat({{"0", "-1"}, {"1", "0"}});  // multiplication by i on the lattice Z[i]
  CHECK(check_morphism({e, e, rot}).ok);
  CHECK(rot * weil_operator(e) == weil_operator(e) * rot);
}

TEST_CASE("polarizations") {
  GradedPolarization q;
  q.forms.emplace(1, mat({{"0", "1"}, {"-1", "0"}}));
  CHECK(check_graded_polarization(elliptic(g("i")), q).polarized);
  auto flipped = check_graded_polarization(elliptic(g("-i")), q);
  CHECK_FALSE(flipped.polarized);
  GradedPolarization one;
  one.forms.emplace(0, Matrix::identity(1));
  CHECK(check_graded_polarization(tate(0), one).polarized);
  GradedPolarization sym;
  sym.forms.emplace(1, Matrix::identity(2));
  CHECK_FALSE(check_graded_polarization(elliptic(g("i")), sym).polarized);
  GradedPolarization kq;
  kq.forms.emplace(0, Matrix::identity(1));
  kq.forms.emplace(-2, Matrix::identity(1));
  CHECK(check_graded_polarization(kummer(g("2+3i")), kq).polarized);
}

TEST_CASE("tensor, dual, hom") {
  auto t = tensor(tate(1), tate(1));
  CHECK(t.rank() == 1);
  CHECK(hodge_numbers(t) == HodgeNumbers{{{-2, -2}, 1}});
  CHECK(hodge_numbers(dual(tate(1))) == HodgeNumbers{{{1, 1}, 1}});
  auto k = kummer(g("2+3i"));
  auto k0 = tensor(k, tate(0));
  CHECK(k0.weight() == k.weight());
  CHECK(k0.hodge() == k.hodge());
  auto h = hom(k, elliptic(g("i")));
  auto d = tensor(dual(k), elliptic(g("i")));
  CHECK(h.weight() == d.weight());
  CHECK(h.hodge() == d.hodge());
  RandomData r(16);
  for (int i = 0; i < 6; ++i) {
    auto a = random_twist(r, random_split(r, 3));
    auto b = random_twist(r, random_split(r, 2));
    auto hab = hom(a, b), dab = tensor(dual(a), b);
    CHECK(hab.weight() == dab.weight());
    CHECK(hab.hodge() == dab.hodge());
    auto dd = dual(dual(a));
    CHECK(dd.weight() == a.weight());
    CHECK(dd.hodge() == a.hodge());
  }
}

TEST_CASE("morphisms and strictness") {
  auto k = kummer(g("i"));
  CHECK(check_morphism({k, k, Matrix::identity(2)}).ok);
  CHECK(strictness_check({k, k, Matrix::identity(2)}).ok);
  for (const char* z : {"0", "i", "3-2i"}) {
    auto kz = kummer(g(z));
    CHECK_FALSE(check_morphism({kz, kz, mat({{"0", "0"}, {"1", "0"}})}).ok);
  }
  CHECK(check_morphism({k, tate(0), mat({{"1", "0"}})}).ok);
  for (const auto& f : fixture_morphisms()) {
    CHECK(check_morphism(f).ok);
    CHECK(strictness_check(f).ok);
    // functoriality of the bigrading
    auto bs = deligne_bigrading(f.source), bt = deligne_bigrading(f.target);
    for (const auto& [pq, sp] : bs.pieces) CHECK(bt.piece(pq.first, pq.second).contains(sp.image(f.matrix)));
  }
}

TEST_CASE("Hodge classes") {
  CHECK(hodge_classes(kummer(g("i"))).rank() == 0);
  CHECK(hodge_classes(kummer(g("0"))).basis() == IntMatrix{{1, 0}});
  CHECK(hodge_classes(kummer(g("1/2"))).basis() == IntMatrix{{2, 1}});
  auto q2 = MixedHodgeStructure::create(IncreasingFiltration::pure(2, 0), DecreasingFiltration::create(2, {{0, Subspace::full(2)}}));
  CHECK(hodge_classes(q2).rank() == 2);
  SUBCASE("classes inject into Gr_0") {
    RandomData r(17);
    for (int t = 0; t < 20; ++t) {
      auto v = random_twist(r, random_split(r, 4, -1, 1));
      auto lat = hodge_classes(v);
      if (lat.rank() == 0) continue;
      GradedPiece gr(v.weight(), 0);
      std::vector<Vector> images;
      for (const auto& row : lat.basis()) {
        Vector x;
        for (const auto& e : row) x.push_back(Gaussian(Rational(e)));
        CHECK(v.hodge().at(0).contains(x));
        images.push_back(gr.coords(x));
      }
      CHECK(Subspace::span(gr.dim(), images).dim() == lat.rank());
    }
  }
}
