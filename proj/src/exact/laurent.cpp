#include "askey/exact/laurent.hpp"

#include <sstream>

#include "askey/errors.hpp"

namespace askey {

namespace {

void require_same_var(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var() != b.var() && !a.is_zero() && !b.is_zero()) throw VariableMismatch();
}

}  // namespace

LaurentPoly LaurentPoly::constant(Var var, const ExactScalar& c) {
  return monomial(var, 0, c);
}

LaurentPoly LaurentPoly::monomial(Var var, int exponent, const ExactScalar& c) {
  LaurentPoly p(var);
  if (!c.is_zero()) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(Var var, int low, std::vector<ExactScalar> coeffs) {
  LaurentPoly p(var);
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  std::size_t hi = coeffs_.size();
  while (hi > 0 && coeffs_[hi - 1].is_zero()) --hi;
  std::size_t lo = 0;
  while (lo < hi && coeffs_[lo].is_zero()) ++lo;
  if (lo == hi) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  coeffs_.resize(hi);
  if (lo > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
  low_ += static_cast<int>(lo);
}

int LaurentPoly::degree() const {
  if (is_zero()) throw Error("degree of the zero polynomial");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

int LaurentPoly::valuation() const {
  if (is_zero()) throw Error("valuation of the zero polynomial");
  return low_;
}

ExactScalar LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > degree()) return {};
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

const ExactScalar& LaurentPoly::leading() const {
  if (is_zero()) throw Error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_var(*this, o);
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  int lo = std::min(low_, o.low_);
  int hi = std::max(degree(), o.degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), ExactScalar());
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    coeffs_[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_var(a, b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.var_);
  std::vector<ExactScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentPoly::from_coeffs(a.var_, a.low_ + b.low_, std::move(out));
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.var_ == b.var_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(var_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted_exponents(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::derivative() const {
  if (has_negative_exponents()) throw NegativeExponent();
  if (is_zero()) return *this;
  std::vector<ExactScalar> out;
  int lo = std::max(low_, 1);
  for (int e = lo; e <= degree(); ++e) out.push_back(coeff(e) * ExactScalar(e));
  return from_coeffs(var_, lo - 1, std::move(out));
}

ExactScalar LaurentPoly::evaluate(const ExactScalar& u) const {
  if (is_zero()) return {};
  ExactScalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc * u.pow(low_);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  const char* name = var_ == Var::X ? "x" : "z";
  std::ostringstream out;
  bool first = true;
  for (int e = degree(); e >= low_; --e) {
    const ExactScalar c = coeff(e);
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    bool unit = c.is_one() && e != 0;
    if (!unit) {
      if (c.is_real() || e == 0) {
        out << c.to_string();
      } else {
        out << '(' << c.to_string() << ')';
      }
    }
    if (e != 0) {
      if (!unit) out << '*';
      out << name;
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

LaurentPoly laurent_arith(const LaurentPoly& p, const LaurentPoly& r, RingOp op) {
  if (p.var() != r.var()) throw VariableMismatch();
  switch (op) {
    case RingOp::Add:
      return p + r;
    case RingOp::Sub:
      return p - r;
    case RingOp::Mul:
      return p * r;
  }
  return LaurentPoly(p.var());
}

LaurentPoly substitute_scale(const LaurentPoly& p, const ExactScalar& c) {
  if (c.is_zero()) throw ZeroScale();
  if (p.is_zero()) return p;
  std::vector<ExactScalar> out = p.coeffs();
  ExactScalar f = c.pow(p.low());
  for (auto& a : out) {
    a *= f;
    f *= c;
  }
  return LaurentPoly::from_coeffs(p.var(), p.low(), std::move(out));
}

LaurentPoly substitute_shift(const LaurentPoly& p, const ExactScalar& c) {
  if (p.has_negative_exponents()) throw NegativeExponent();
  if (p.is_zero() || c.is_zero()) return p;
  // Horner in the shifted variable: acc <- acc*(u+c) + a_k.
  const int deg = p.degree();
  std::vector<ExactScalar> acc;
  for (int e = deg; e >= 0; --e) {
    std::vector<ExactScalar> next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k];
      next[k] += acc[k] * c;
    }
    next[0] += p.coeff(e);
    acc = std::move(next);
  }
  return LaurentPoly::from_coeffs(p.var(), 0, std::move(acc));
}

LaurentPoly star_conjugate(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  std::vector<ExactScalar> out;
  out.reserve(p.coeffs().size());
  if (p.var() == Var::X) {
    for (const auto& a : p.coeffs()) out.push_back(a.conj());
    return LaurentPoly::from_coeffs(Var::X, p.low(), std::move(out));
  }
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) out.push_back(it->conj());
  return LaurentPoly::from_coeffs(Var::Z, -p.degree(), std::move(out));
}

bool try_exact_divide(const LaurentPoly& p, const LaurentPoly& d, LaurentPoly& quotient) {
  if (d.is_zero()) throw DivisionByZero();
  if (p.var() != d.var() && !p.is_zero()) throw VariableMismatch();
  if (p.is_zero()) {
    quotient = LaurentPoly(d.var());
    return true;
  }
  const int shift = p.valuation() - d.valuation();
  std::vector<ExactScalar> rem = p.coeffs();
  const auto& dc = d.coeffs();
  const std::size_t dn = dc.size();
  if (rem.size() < dn) return false;
  const std::size_t qn = rem.size() - dn + 1;
  std::vector<ExactScalar> q(qn);
  const ExactScalar lead_inv = dc.back().inverse();
  for (std::size_t k = qn; k-- > 0;) {
    ExactScalar t = rem[k + dn - 1] * lead_inv;
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= t * dc[j];
    q[k] = std::move(t);
  }
  for (std::size_t k = 0; k + 1 < dn; ++k) {
    if (!rem[k].is_zero()) return false;
  }
  quotient = LaurentPoly::from_coeffs(p.var(), shift, std::move(q));
  return true;
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
  LaurentPoly q(p.var());
  if (!try_exact_divide(p, d, q)) {
    throw NotDivisible("(" + p.to_string() + ") is not divisible by (" + d.to_string() + ")");
  }
  return q;
}

}  // namespace askey
