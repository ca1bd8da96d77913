#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace askey {

using Rational = mpq_class;

/// Exact element of Q(i): a pair of arbitrary-precision rationals.
///
/// Every numeric constant of a verification run (parameters, q^{1/2},
/// the unit e^{i phi}, the imaginary unit) lives in this field, so no
/// identity check ever rounds.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static ExactScalar i() { return {Rational(0), Rational(1)}; }
  static ExactScalar frac(long num, long den);

  /// Parses "3/4", "-2", "1/2+1/3i", "-i", "2/5i", "1/2-i".
  static ExactScalar parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  ExactScalar conj() const { return {re_, -im_}; }
  /// |s|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  ExactScalar inverse() const;
  /// Integer power; negative exponents invert.
  ExactScalar pow(long k) const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend ExactScalar operator-(const ExactScalar& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Canonical rendering "re+imi" with reduced fractions, e.g. "1/2-3/4i".
  std::string to_string() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::complex<long double> to_complex_ld() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Field arithmetic dispatch; Div by zero throws DivisionByZero.
ExactScalar scalar_arith(const ExactScalar& a, const ExactScalar& b, ArithOp op);

/// a (a+1) ... (a+n-1); n = 0 gives 1.
ExactScalar rising_factorial(const ExactScalar& a, int n);

/// (a; q)_n = prod_{k<n} (1 - a q^k).
ExactScalar qpochhammer(const ExactScalar& a, const ExactScalar& q, int n);

/// (a_1, ..., a_r; q)_n = prod_j (a_j; q)_n.
ExactScalar qpochhammer(std::initializer_list<ExactScalar> as, const ExactScalar& q, int n);

ExactScalar factorial(int n);

}  // namespace askey
