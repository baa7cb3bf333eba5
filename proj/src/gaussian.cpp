#include "hodge/gaussian.hpp"

#include <cctype>
#include <cmath>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw InputError("malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    out = Rational(Integer(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw InputError("malformed decimal '" + std::string(text) + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
    out = Rational(w * scale + Integer(std::string(frac)), scale);
  } else {
    if (!all_digits(body)) throw InputError("malformed rational '" + std::string(text) + "'");
    out = Rational(Integer(std::string(body)));
  }
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Gaussian Gaussian::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw InputError("division by zero in Q(i)");
  return {re_ / n, -im_ / n};
}

Gaussian Gaussian::from_complex(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InputError("non-finite complex value");
  return {Rational(z.real()), Rational(z.imag())};
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) { return *this *= o.inverse(); }

std::string to_string(const Gaussian& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im = to_string(z.im()) + "*i";
  if (sgn(z.re()) == 0) return im;
  return to_string(z.re()) + (sgn(z.im()) > 0 ? "+" : "") + im;
}

Gaussian parse_gaussian(std::string_view text) {
  if (text.empty()) throw InputError("empty scalar");
  if (text.back() != 'i') return Gaussian(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  size_t split = std::string_view::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  Rational re(0);
  std::string_view imag = body;
  if (split != std::string_view::npos) {
    re = parse_rational(body.substr(0, split));
    imag = body.substr(split);
  }
  if (!imag.empty() && imag.back() == '*') {
    imag.remove_suffix(1);
    if (imag.empty() || imag == "+" || imag == "-")
      throw InputError("malformed scalar '" + std::string(text) + "'");
  }
  Rational im;
  if (imag.empty() || imag == "+") {
    im = 1;
  } else if (imag == "-") {
    im = -1;
  } else {
    im = parse_rational(imag);
  }
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_string(z); }

}  // namespace hodge
