#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hodge/mhs.hpp"

namespace hodge::testing {

inline Gaussian g(const std::string& s) { return parse_gaussian(s); }

inline Vector vec(std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(parse_gaussian(x));
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Vector> rs;
  size_t cols = 0;
  for (const auto& r : rows) {
    rs.push_back(vec(r));
    cols = rs.back().size();
  }
  return Matrix::from_rows(rs, cols);
}

inline Subspace span(size_t n, const std::vector<Vector>& vs) { return Subspace::span(n, vs); }

// Kummer structure K(z): W_{-2} = <e1>, W_0 = V, F^0 = <e0 + z e1>.
inline MixedHodgeStructure kummer(const Gaussian& z) {
  auto w = IncreasingFiltration::create(2, {{-2, span(2, {unit_vector(2, 1)})}, {0, Subspace::full(2)}});
  Vector f0{Gaussian(1), z};
  auto f = DecreasingFiltration::create(2, {{-1, Subspace::full(2)}, {0, span(2, {f0})}});
  return MixedHodgeStructure::create(w, f);
}

// Pure weight 1, F^1 = <e0 + tau e1>.
inline MixedHodgeStructure elliptic(const Gaussian& tau) {
  auto w = IncreasingFiltration::pure(2, 1);
  Vector f1{Gaussian(1), tau};
  auto f = DecreasingFiltration::create(2, {{0, Subspace::full(2)}, {1, span(2, {f1})}});
  return MixedHodgeStructure::create(w, f);
}

}  // namespace hodge::testing

#include "hodge/admissibility.hpp"

namespace hodge::testing {

inline IncreasingFiltration kummer_weight() {
  return IncreasingFiltration::create(2, {{-2, Subspace::span(2, {unit_vector(2, 1)})}, {0, Subspace::full(2)}});
}

inline GradedPolarization unit_polarization(const IncreasingFiltration& w) {
  GradedPolarization q;
  for (int k : w.graded_indices()) {
    size_t d = GradedPiece(w, k).dim();
    q.forms.emplace(k, Matrix::identity(d));
  }
  return q;
}

inline Polynomial poly(std::initializer_list<const char*> cs) {
  Polynomial p;
  for (const char* c : cs) p.push_back(parse_gaussian(c));
  return p;
}

// N: e0 -> e1, Psi = <e0>.
inline LocalModel1D kummer_model() {
  auto w = kummer_weight();
  return LocalModel1D::create(2, w, unit_polarization(w), NilpotentOperator::create(mat({{"0", "0"}, {"1", "0"}})),
                              {{0, {{poly({"1"}), poly({"0"})}}}});
}

// N = 0, Psi(q) = <q e0 + e1>.
inline LocalModel1D exp_model() {
  auto w = kummer_weight();
  return LocalModel1D::create(2, w, unit_polarization(w), NilpotentOperator::create(Matrix(2, 2)),
                              {{0, {{poly({"0", "1"}), poly({"1"})}}}});
}

// Pure weight 1, N: e0 -> e1, Psi = <e0> in F^1.
inline LocalModel1D tate_model() {
  auto w = IncreasingFiltration::pure(2, 1);
  GradedPolarization q;
  q.forms.emplace(1, mat({{"0", "1"}, {"-1", "0"}}));
  return LocalModel1D::create(2, w, q, NilpotentOperator::create(mat({{"0", "0"}, {"1", "0"}})),
                              {{1, {{poly({"1"}), poly({"0"})}}}});
}

}  // namespace hodge::testing
