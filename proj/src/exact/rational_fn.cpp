#include "askey/exact/rational_fn.hpp"

#include "askey/errors.hpp"

namespace askey {

RationalFn::RationalFn(Var var) : num_(var), den_(LaurentPoly::constant(var, 1)) {}

RationalFn::RationalFn(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(num_.var(), 1)) {}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (!num_.is_zero() && num_.var() != den_.var()) throw VariableMismatch();
  normalize();
}

void RationalFn::normalize() {
  const int v = den_.valuation();
  ExactScalar lead = den_.leading().inverse();
  den_ = den_.shifted_exponents(-v) * lead;
  num_ = num_.shifted_exponents(-v) * lead;
  if (num_.is_zero()) num_ = LaurentPoly(den_.var());
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    return *this;
  }
  *this = RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  *this = RationalFn(num_ * o.num_, den_ * o.den_);
  return *this;
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

LaurentPoly RationalFn::to_polynomial() const { return exact_divide(num_, den_); }

RationalFn RationalFn::star() const { return {star_conjugate(num_), star_conjugate(den_)}; }

std::string RationalFn::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace askey
