#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

namespace hodge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "a/b" or a finite decimal "a.b" into a reduced rational.
/// Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& r);

/// Exact element of Q(i).
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Gaussian conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gaussian inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  /// Exact conversion of a finite double pair (every double is a dyadic rational).
  static Gaussian from_complex(std::complex<double> z);

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Canonical text form: "a/b", "c/d*i", "a/b+c/d*i" or "a/b-c/d*i", with
/// integers written without a denominator.
std::string to_string(const Gaussian& z);

/// Inverse of to_string; also accepts "i", "-i", "2*i", "1/2+i" and decimals.
Gaussian parse_gaussian(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Gaussian& z);

}  // namespace hodge
