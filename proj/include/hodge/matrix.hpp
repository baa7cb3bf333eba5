#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hodge/gaussian.hpp"

namespace hodge {

using Vector = std::vector<Gaussian>;

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Gaussian& c);
Vector conj(const Vector& v);
Gaussian dot(const Vector& a, const Vector& b);  // bilinear, no conjugation
bool is_zero(const Vector& v);
Vector unit_vector(size_t n, size_t k);

/// Dense matrix over Q(i). Operators act on column vectors: entry (i, j) is the
/// e_i-coefficient of the image of e_j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, size_t rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Gaussian& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Gaussian& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Vector row(size_t i) const;
  Vector col(size_t j) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  Matrix conj() const;
  Matrix adjoint() const { return conj().transpose(); }

  bool is_zero() const;
  bool is_real() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Gaussian& c, Matrix a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  Matrix pow(unsigned k) const;
  Gaussian trace() const;
  Gaussian determinant() const;
  size_t rank() const;
  /// Throws InputError if singular.
  Matrix inverse() const;
  /// Basis of {x : A x = 0}.
  std::vector<Vector> kernel() const;

  /// exp of a nilpotent matrix as the finite series; throws if not nilpotent.
  Matrix exp_nilpotent() const;
  /// log of a unipotent matrix as the finite series; throws if not unipotent.
  Matrix log_unipotent() const;
  /// Smallest k with A^k = 0, or 0 if the matrix is not nilpotent.
  unsigned nilpotency_index() const;

  /// Row-major flattening, used to treat spaces of operators as subspaces.
  Vector flatten() const { return data_; }
  static Matrix unflatten(const Vector& v, size_t rows, size_t cols);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Gaussian> data_;
};

/// Commutator AB - BA.
Matrix bracket(const Matrix& a, const Matrix& b);

struct EchelonForm {
  Matrix reduced;               // reduced row echelon form
  std::vector<size_t> pivots;   // pivot column of each nonzero row
};

/// Reduced row echelon form; zero rows are dropped from `reduced`.
EchelonForm row_reduce(const Matrix& m);

/// Solves A x = b; returns false if inconsistent. `x` receives one solution.
bool solve(const Matrix& a, const Vector& b, Vector& x);

}  // namespace hodge
