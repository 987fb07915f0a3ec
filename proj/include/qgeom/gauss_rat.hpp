#pragma once

#include <complex>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace qgeom {

using Rational = mpq_class;

/// Exact complex number re + im*i with arbitrary-precision rational parts.
/// GMP keeps both parts in lowest terms after every operation.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long re) : re_(re) {}  // NOLINT: implicit integer promotion is intended
  GaussRat(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  GaussRat(long re_num, long re_den, long im_num, long im_den)
      : re_(re_num, re_den), im_(im_num, im_den) {
    re_.canonicalize();
    im_.canonicalize();
  }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, Rational(-im_)); }

  /// Squared modulus, exact.
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    Rational d = o.norm();
    if (sgn(d) == 0) throw std::domain_error("GaussRat: division by zero");
    Rational r = (re_ * o.re_ + im_ * o.im_) / d;
    Rational i = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return GaussRat(Rational(-a.re_), Rational(-a.im_)); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  /// `p/q+r/s*i`, zero parts omitted; "0" for zero.
  std::string str() const {
    const bool has_re = sgn(re_) != 0;
    const bool has_im = sgn(im_) != 0;
    if (!has_re && !has_im) return "0";
    std::string out;
    if (has_re) out = re_.get_str();
    if (has_im) {
      std::string im = im_.get_str();
      if (has_re && sgn(im_) > 0) out += "+";
      out += im + "*i";
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Parses "p", "p/q" (optionally signed) into a reduced rational.
/// Returns false on malformed text or a zero denominator.
inline bool parse_rational(const std::string& text, Rational& out) {
  if (text.empty()) return false;
  std::size_t slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  if (slash == std::string::npos) {
    if (!valid_int(text)) return false;
    out = Rational(mpz_class(strip_plus(text)));
    return true;
  }
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) return false;
  mpz_class d(strip_plus(den));
  if (d == 0) return false;
  out = Rational(mpz_class(strip_plus(num)), d);
  out.canonicalize();
  return true;
}

}  // namespace qgeom
