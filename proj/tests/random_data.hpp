#pragma once

#include <random>

#include "helpers.hpp"

namespace hodge::testing {

// Small Gaussian rationals; `real` forces zero imaginary part.
struct RandomData {
  std::mt19937 rng;
  explicit RandomData(unsigned seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Rational rational() {
    Rational r(integer(-4, 4), integer(1, 3));
    r.canonicalize();
    return r;
  }

  Gaussian scalar(bool real = false) {
    if (real) return Gaussian(rational());
    return Gaussian(rational(), integer(0, 2) == 0 ? Rational(0) : rational());
  }

  Vector vector(size_t n, bool real = false) {
    Vector v;
    for (size_t i = 0; i < n; ++i) v.push_back(scalar(real));
    return v;
  }

  Matrix matrix(size_t r, size_t c, bool real = false) {
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m(i, j) = scalar(real);
    return m;
  }

  Subspace subspace(size_t n, size_t k, bool real = false) {
    std::vector<Vector> vs;
    for (size_t i = 0; i < k; ++i) vs.push_back(vector(n, real));
    return Subspace::span(n, vs);
  }

  // Unipotent with integer entries, lower triangular w.r.t. the given block order.
  Matrix lower_unipotent(size_t n, bool real = true) {
    Matrix m = Matrix::identity(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < i; ++j) m(i, j) = scalar(real);
    return m;
  }
};

}  // namespace hodge::testing
