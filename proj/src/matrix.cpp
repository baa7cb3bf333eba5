#include "hodge/matrix.hpp"

#include <utility>

#include "hodge/errors.hpp"

namespace hodge {

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector out(a);
  for (size_t k = 0; k < a.size(); ++k) out[k] += b[k];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector out(a);
  for (size_t k = 0; k < a.size(); ++k) out[k] -= b[k];
  return out;
}

Vector scaled(const Vector& v, const Gaussian& c) {
  Vector out(v);
  for (auto& x : out) x *= c;
  return out;
}

Vector conj(const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conj());
  return out;
}

Gaussian dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Gaussian s;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector unit_vector(size_t n, size_t k) {
  Vector v(n);
  v.at(k) = 1;
  return v;
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row has wrong length");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, size_t rows) {
  Matrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("column has wrong length");
    for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::unflatten(const Vector& v, size_t rows, size_t cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("flattened size mismatch");
  Matrix m(rows, cols);
  m.data_ = v;
  return m;
}

Vector Matrix::row(size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(size_t j) const {
  Vector v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj() const {
  Matrix c(*this);
  for (auto& x : c.data_) x = x.conj();
  return c;
}

bool Matrix::is_zero() const { return hodge::is_zero(data_); }

bool Matrix::is_real() const {
  for (const auto& x : data_)
    if (!x.is_real()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Gaussian& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const Gaussian& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

Matrix operator*(const Gaussian& c, Matrix a) {
  for (auto& x : a.data_) x *= c;
  return a;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t j = 0; j < a.cols_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

Matrix Matrix::pow(unsigned k) const {
  if (!is_square()) throw DimensionMismatch("pow of non-square matrix");
  Matrix out = identity(rows_);
  for (unsigned s = 0; s < k; ++s) out = out * *this;
  return out;
}

Gaussian Matrix::trace() const {
  Gaussian t;
  for (size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
  return t;
}

Gaussian Matrix::determinant() const {
  if (!is_square()) throw DimensionMismatch("determinant of non-square matrix");
  Matrix m(*this);
  Gaussian det = 1;
  for (size_t c = 0; c < cols_; ++c) {
    size_t p = c;
    while (p < rows_ && m(p, c).is_zero()) ++p;
    if (p == rows_) return Gaussian();
    if (p != c) {
      for (size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Gaussian inv = m(c, c).inverse();
    for (size_t r = c + 1; r < rows_; ++r) {
      if (m(r, c).is_zero()) continue;
      Gaussian f = m(r, c) * inv;
      for (size_t j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

EchelonForm row_reduce(const Matrix& input) {
  Matrix m(input);
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Gaussian inv = m(r, c).inverse();
    for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Gaussian f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, m.cols());
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

size_t Matrix::rank() const { return row_reduce(*this).pivots.size(); }

std::vector<Vector> Matrix::kernel() const {
  auto [red, pivots] = row_reduce(*this);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols_);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw DimensionMismatch("inverse of non-square matrix");
  size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto [red, pivots] = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw InputError("matrix is singular");
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

unsigned Matrix::nilpotency_index() const {
  if (!is_square()) throw DimensionMismatch("nilpotency of non-square matrix");
  if (rows_ == 0) return 0;
  Matrix p = identity(rows_);
  for (unsigned k = 1; k <= rows_; ++k) {
    p = p * *this;
    if (p.is_zero()) return k;
  }
  return 0;
}

Matrix Matrix::exp_nilpotent() const {
  if (!is_square()) throw DimensionMismatch("exp of non-square matrix");
  Matrix out = identity(rows_);
  Matrix term = identity(rows_);
  for (unsigned k = 1; k <= rows_; ++k) {
    term = Gaussian(Rational(1, k)) * (term * *this);
    if (term.is_zero()) return out;
    out += term;
  }
  if (!term.is_zero()) throw InputError("exp_nilpotent: matrix is not nilpotent");
  return out;
}

Matrix Matrix::log_unipotent() const {
  if (!is_square()) throw DimensionMismatch("log of non-square matrix");
  Matrix x = *this - identity(rows_);
  Matrix out(rows_, rows_);
  Matrix power = identity(rows_);
  for (unsigned k = 1; k <= rows_ + 1; ++k) {
    power = power * x;
    if (power.is_zero()) return out;
    Gaussian c(Rational(k % 2 == 1 ? 1 : -1, k));
    out += c * power;
  }
  throw InputError("log_unipotent: matrix is not unipotent");
}

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

bool solve(const Matrix& a, const Vector& b, Vector& x) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: rhs size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto [red, pivots] = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return false;
  x.assign(a.cols(), Gaussian());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red(r, a.cols());
  return true;
}

}  // namespace hodge
