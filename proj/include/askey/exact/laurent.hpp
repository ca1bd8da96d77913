#pragma once

#include <string>
#include <vector>

#include "askey/exact/scalar.hpp"

namespace askey {

/// Formal variable of a representation polynomial: X stands for x (or for
/// eta itself in the ordinary-QM families), Z for z = e^{ix}.
enum class Var { X, Z };

/// Finite Laurent polynomial sum_k c_k u^k over Q(i).
///
/// Stored densely from the lowest to the highest nonzero exponent; both end
/// coefficients are nonzero (or the polynomial is empty), so equality is
/// coefficient equality.
class LaurentPoly {
 public:
  explicit LaurentPoly(Var var = Var::X) : var_(var) {}

  static LaurentPoly constant(Var var, const ExactScalar& c);
  static LaurentPoly monomial(Var var, int exponent, const ExactScalar& c = ExactScalar(1));
  /// Coefficients of u^low, u^{low+1}, ...
  static LaurentPoly from_coeffs(Var var, int low, std::vector<ExactScalar> coeffs);

  Var var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Highest exponent; requires a nonzero polynomial.
  int degree() const;
  /// Lowest exponent; requires a nonzero polynomial.
  int valuation() const;
  ExactScalar coeff(int exponent) const;
  const ExactScalar& leading() const;
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  bool has_negative_exponents() const { return !is_zero() && low_ < 0; }

  int low() const { return low_; }
  const std::vector<ExactScalar>& coeffs() const { return coeffs_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const ExactScalar& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const ExactScalar& c) { return a *= c; }
  friend LaurentPoly operator*(const ExactScalar& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator-(LaurentPoly a);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(unsigned k) const;
  /// Multiplies by u^k.
  LaurentPoly shifted_exponents(int k) const;
  /// d/du; only for polynomials without negative exponents.
  LaurentPoly derivative() const;
  ExactScalar evaluate(const ExactScalar& u) const;

  /// Human-readable rendering, e.g. "1/2*z^2 - i*z + 3".
  std::string to_string() const;

 private:
  void trim();

  Var var_;
  int low_ = 0;
  std::vector<ExactScalar> coeffs_;
};

enum class RingOp { Add, Sub, Mul };

/// Ring arithmetic dispatch; mixed variables throw VariableMismatch.
LaurentPoly laurent_arith(const LaurentPoly& p, const LaurentPoly& r, RingOp op);

/// u -> c u: the coefficient of u^k is multiplied by c^k. c = 0 throws ZeroScale.
LaurentPoly substitute_scale(const LaurentPoly& p, const ExactScalar& c);

/// u -> u + c by binomial re-expansion. Negative exponents throw NegativeExponent.
LaurentPoly substitute_shift(const LaurentPoly& p, const ExactScalar& c);

/// Coefficient conjugation of the x-power series. On Var::Z the exponent is
/// negated as well, since conj of sum c_k e^{ikx} is sum conj(c_k) e^{-ikx}.
LaurentPoly star_conjugate(const LaurentPoly& p);

/// Exact quotient q with q*d = p; throws NotDivisible when none exists.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d);

/// Polynomial division with remainder after clearing monomial content.
/// Returns false when the remainder is nonzero.
bool try_exact_divide(const LaurentPoly& p, const LaurentPoly& d, LaurentPoly& quotient);

}  // namespace askey
