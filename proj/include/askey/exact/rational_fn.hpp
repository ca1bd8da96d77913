#pragma once

#include <string>

#include "askey/exact/laurent.hpp"

namespace askey {

/// num/den with den normalized to valuation 0 and leading coefficient 1.
/// Only monomial content is removed; equality is by cross-multiplication.
class RationalFn {
 public:
  explicit RationalFn(Var var = Var::X);
  RationalFn(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  RationalFn(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  Var var() const { return num_.var(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator-(const RationalFn& a) { return {-a.num_, a.den_}; }

  friend bool operator==(const RationalFn& a, const RationalFn& b);
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  /// Exact quotient num/den; throws NotDivisible when it is not polynomial.
  LaurentPoly to_polynomial() const;
  RationalFn star() const;
  std::string to_string() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace askey
