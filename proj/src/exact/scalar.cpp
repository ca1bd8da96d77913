#include "askey/exact/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "askey/errors.hpp"

namespace askey {

namespace {

Rational parse_rational(std::string_view text, std::string_view whole) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || s == "-") {
    throw InvalidBinding("malformed number '" + std::string(whole) + "'");
  }
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
      throw InvalidBinding("malformed number '" + std::string(whole) + "'");
    }
  }
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw InvalidBinding("malformed number '" + std::string(whole) + "'");
  }
  r.canonicalize();
  return r;
}

std::string render(const Rational& r) { return r.get_str(); }

}  // namespace

ExactScalar ExactScalar::frac(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational r(num, den);
  r.canonicalize();
  return {r};
}

ExactScalar ExactScalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InvalidBinding("empty number");
  if (s.back() != 'i') return {parse_rational(s, text)};

  s.pop_back();
  // Split "re(+|-)im" at the last sign that is not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part, text);
  return {re, parse_rational(im_part, text)};
}

ExactScalar ExactScalar::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw DivisionByZero();
  return {Rational(re_ / n), Rational(-im_ / n)};
}

ExactScalar ExactScalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  ExactScalar result(1);
  ExactScalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string ExactScalar::to_string() const {
  if (sgn(im_) == 0) return render(re_);
  std::ostringstream out;
  if (sgn(re_) != 0) out << render(re_);
  if (sgn(im_) > 0 && sgn(re_) != 0) out << '+';
  if (im_ == 1) {
  } else if (im_ == -1) {
    out << '-';
  } else {
    out << render(im_);
  }
  out << 'i';
  return out.str();
}

std::complex<long double> ExactScalar::to_complex_ld() const {
  // mpq -> long double through a string keeps ~19 digits without mpfr.
  auto conv = [](const Rational& r) {
    return static_cast<long double>(r.get_num().get_d()) /
           static_cast<long double>(r.get_den().get_d());
  };
  return {conv(re_), conv(im_)};
}

ExactScalar scalar_arith(const ExactScalar& a, const ExactScalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Div:
      return a / b;
  }
  return {};
}

ExactScalar rising_factorial(const ExactScalar& a, int n) {
  ExactScalar result(1);
  ExactScalar term = a;
  for (int k = 0; k < n; ++k) {
    result *= term;
    term += 1;
  }
  return result;
}

ExactScalar qpochhammer(const ExactScalar& a, const ExactScalar& q, int n) {
  ExactScalar result(1);
  ExactScalar aq = a;
  for (int k = 0; k < n; ++k) {
    result *= ExactScalar(1) - aq;
    aq *= q;
  }
  return result;
}

ExactScalar qpochhammer(std::initializer_list<ExactScalar> as, const ExactScalar& q, int n) {
  ExactScalar result(1);
  for (const auto& a : as) result *= qpochhammer(a, q, n);
  return result;
}

ExactScalar factorial(int n) { return rising_factorial(ExactScalar(1), n); }

}  // namespace askey
