#include "hodge/hodge_loci.hpp"

#include <algorithm>
#include <cmath>

namespace hodge {

Matrix hodge_class_gram(const MixedHodgeStructure& v, const Matrix& q0, const IntegerLattice& lattice) {
  const auto& w = v.weight();
  GradedPiece gr(w, 0);
  if (q0.rows() != gr.dim() || q0.cols() != gr.dim()) throw DimensionMismatch("q0 does not match dim Gr_0");
  if (!q0.is_real() || q0.transpose() != q0) throw InputError("q0 must be a rational symmetric form");
  std::vector<Vector> images;
  for (const auto& b : lattice.basis()) {
    Vector x;
    for (const auto& e : b) x.push_back(Gaussian(Rational(e)));
    images.push_back(gr.coords(x));
  }
  size_t r = images.size();
  Matrix g(r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) g(i, j) = dot(images[i], q0 * images[j]);
  return g;
}

namespace {

// x^T G x = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2; empty if not positive definite.
bool complete_squares(const Matrix& g, std::vector<Rational>& d, std::vector<std::vector<Rational>>& mu) {
  size_t r = g.rows();
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) a[i][j] = g(i, j).re();
  d.assign(r, 0);
  mu.assign(r, std::vector<Rational>(r, 0));
  for (size_t i = 0; i < r; ++i) {
    if (sgn(a[i][i]) <= 0) return false;
    d[i] = a[i][i];
    for (size_t j = i + 1; j < r; ++j) mu[i][j] = a[i][j] / d[i];
    for (size_t j = i + 1; j < r; ++j)
      for (size_t k = i + 1; k < r; ++k) a[j][k] -= d[i] * mu[i][j] * mu[i][k];
  }
  return true;
}

}  // namespace

std::vector<HodgeClass> enumerate_hdg0_d(const HodgeClassQuery& query) {
  if (sgn(query.bound) < 0) throw InputError("norm bound must be nonnegative");
  auto lattice = hodge_classes(query.mhs);
  Matrix g = hodge_class_gram(query.mhs, query.q0, lattice);
  size_t r = lattice.rank();
  std::vector<Rational> d;
  std::vector<std::vector<Rational>> mu;
  if (!complete_squares(g, d, mu)) throw InputError("q0 is not positive definite on the Hodge class lattice");

  std::vector<HodgeClass> out;
  if (r == 0) return out;
  std::vector<Integer> x(r);
  size_t n = query.mhs.rank();
  // depth-first from the last coordinate down
  auto recurse = [&](auto&& self, size_t level, const Rational& budget) -> void {
    size_t i = level - 1;
    Rational c = 0;
    for (size_t j = i + 1; j < r; ++j) c -= mu[i][j] * Rational(x[j]);
    double radius = std::sqrt(Rational(budget / d[i]).get_d());
    double cd = c.get_d();
    long lo = static_cast<long>(std::floor(cd - radius)) - 1, hi = static_cast<long>(std::ceil(cd + radius)) + 1;
    for (long t = lo; t <= hi; ++t) {
      Rational dev = Rational(t) - c;
      Rational rest = budget - d[i] * dev * dev;
      if (sgn(rest) < 0) continue;
      x[i] = t;
      if (i > 0) {
        self(self, i, rest);
        continue;
      }
      if (std::all_of(x.begin(), x.end(), [](const Integer& e) { return e == 0; })) continue;
      IntVector v(n, 0);
      for (size_t k = 0; k < r; ++k)
        for (size_t m = 0; m < n; ++m) v[m] += x[k] * lattice.basis()[k][m];
      out.push_back({v, query.bound - rest});
    }
    x[i] = 0;
  };
  recurse(recurse, r, query.bound);
  std::sort(out.begin(), out.end(), [](const HodgeClass& a, const HodgeClass& b) { return a.v < b.v; });
  return out;
}

LocusIndicator hdg_locus_indicator(const PeriodDomainSpec& spec, const DecreasingFiltration& f, const Rational& d) {
  auto m = membership(spec, f);
  if (!m.in_M) throw InputError("point is not in M: " + m.detail);
  auto v = MixedHodgeStructure::create(spec.weight, f);
  LocusIndicator r;
  auto it = spec.polarizations.forms.find(0);
  if (it == spec.polarizations.forms.end()) return r;
  auto classes = enumerate_hdg0_d({v, it->second, d});
  for (const auto& c : classes) {
    auto lead = std::find_if(c.v.begin(), c.v.end(), [](const Integer& e) { return e != 0; });
    if (*lead < 0) continue;
    if (!r.witness || c.norm < r.witness->norm) r.witness = c;
  }
  r.nonempty = !classes.empty();
  return r;
}

}  // namespace hodge
