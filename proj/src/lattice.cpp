#include "hodge/lattice.hpp"

#include <utility>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

// Replaces rows a, b by a unimodular combination so that b[c] becomes 0 and
// a[c] becomes gcd(a[c], b[c]).
void gcd_combine(IntVector& a, IntVector& b, size_t c) {
  Integer x = a[c], y = b[c];
  if (y == 0) return;
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  Integer xg = x / g, yg = y / g;
  for (size_t j = 0; j < a.size(); ++j) {
    Integer na = s * a[j] + t * b[j];
    Integer nb = yg * a[j] - xg * b[j];
    a[j] = std::move(na);
    b[j] = std::move(nb);
  }
}

bool zero_row(const IntVector& v, size_t from, size_t to) {
  for (size_t j = from; j < to; ++j)
    if (v[j] != 0) return false;
  return true;
}

// Integer row echelon form on columns [0, cols); returns pivot columns.
std::vector<size_t> echelonize(IntMatrix& m, size_t cols) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (size_t i = r + 1; i < m.size(); ++i) gcd_combine(m[r], m[i], c);
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix m, size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) throw DimensionMismatch("integer matrix row has wrong length");
  auto pivots = echelonize(m, cols);
  m.resize(pivots.size());
  for (size_t r = 0; r < pivots.size(); ++r) {
    size_t c = pivots[r];
    for (size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q == 0) continue;
      for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
  }
  return m;
}

std::vector<Integer> smith_invariants(IntMatrix m, size_t cols) {
  size_t rows = m.size();
  std::vector<Integer> out;
  for (size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      size_t pi = rows, pj = cols;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return out;
      std::swap(m[pi], m[t]);
      for (auto& row : m) std::swap(row[pj], row[t]);
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      size_t bad = rows;
      for (size_t i = t + 1; i < rows && bad == rows; ++i)
        for (size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    out.push_back(abs(m[t][t]));
  }
  return out;
}

IntegerLattice::IntegerLattice(size_t ambient, const IntMatrix& generators) : ambient_(ambient) {
  basis_ = hermite_normal_form(generators, ambient);
  if (basis_.size() != generators.size())
    throw InputError("lattice generators are linearly dependent");
}

bool IntegerLattice::contains(const IntVector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector has wrong length");
  IntVector r = v;
  for (const auto& row : basis_) {
    size_t c = 0;
    while (row[c] == 0) ++c;
    if (r[c] % row[c] != 0) return false;
    Integer q = r[c] / row[c];
    for (size_t j = 0; j < ambient_; ++j) r[j] -= q * row[j];
  }
  return zero_row(r, 0, ambient_);
}

IntegerLattice integer_kernel(const IntMatrix& m, size_t cols) {
  size_t rows = m.size();
  for (const auto& row : m)
    if (row.size() != cols) throw DimensionMismatch("integer matrix row has wrong length");
  // Rows of [m^T | I]; unimodular row operations keep the right block a basis of Z^cols.
  IntMatrix aug(cols, IntVector(rows + cols));
  for (size_t j = 0; j < cols; ++j) {
    for (size_t i = 0; i < rows; ++i) aug[j][i] = m[i][j];
    aug[j][rows + j] = 1;
  }
  echelonize(aug, rows);
  IntMatrix kernel;
  for (const auto& row : aug)
    if (zero_row(row, 0, rows)) kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(rows), row.end());
  return IntegerLattice(cols, kernel);
}

IntMatrix clear_denominators(const std::vector<std::vector<Rational>>& rows) {
  IntMatrix out;
  for (const auto& row : rows) {
    Integer l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector v;
    for (const auto& x : row) v.push_back(x.get_num() * (l / x.get_den()));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hodge
