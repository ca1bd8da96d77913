#include <doctest.h>

#include <random>

#include "askey/errors.hpp"
#include "askey/exact/laurent.hpp"
#include "askey/exact/matrix.hpp"
#include "askey/exact/rational_fn.hpp"
#include "askey/exact/scalar.hpp"

using namespace askey;
using S = ExactScalar;

namespace {

S P(const char* t) { return S::parse(t); }

LaurentPoly zpoly(int low, std::vector<S> c) { return LaurentPoly::from_coeffs(Var::Z, low, std::move(c)); }
LaurentPoly xpoly(std::vector<S> c) { return LaurentPoly::from_coeffs(Var::X, 0, std::move(c)); }

struct Gen {
  std::mt19937_64 rng{20240611};
  S scalar() {
    const long a = static_cast<long>(rng() % 11) - 5, b = 1 + static_cast<long>(rng() % 4);
    const long c = static_cast<long>(rng() % 7) - 3, d = 1 + static_cast<long>(rng() % 3);
    return {Rational(a, b), Rational(c, d)};
  }
  LaurentPoly laurent(Var v, bool allow_negative = true) {
    const int low = allow_negative ? static_cast<int>(rng() % 5) - 2 : static_cast<int>(rng() % 2);
    const int len = static_cast<int>(rng() % 4);
    std::vector<S> c;
    for (int k = 0; k < len; ++k) c.push_back(scalar());
    return LaurentPoly::from_coeffs(v, low, c);
  }
};

}  // namespace

TEST_CASE("scalar field arithmetic") {
  CHECK(scalar_arith(P("1+i"), P("1-i"), ArithOp::Mul) == S(2));
  CHECK(scalar_arith(P("3/8"), P("3/8"), ArithOp::Div) == S(1));
  CHECK(scalar_arith(P("1/2+1/3i"), P("1/2-1/3i"), ArithOp::Add) == S(1));
  CHECK_THROWS_AS(scalar_arith(S(1), S(0), ArithOp::Div), DivisionByZero);
  CHECK(P("2/4").to_string() == "1/2");
  CHECK(P("-i") == S(Rational(0), Rational(-1)));
  CHECK(P("1/2-3/4i").to_string() == "1/2-3/4i");
  CHECK(S(Rational(2, 4), Rational(6, 8)) == P("1/2+3/4i"));
}

TEST_CASE("conjugation is an involutive automorphism") {
  Gen g;
  for (int k = 0; k < 200; ++k) {
    const S a = g.scalar(), b = g.scalar();
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("rising factorial and q-Pochhammer") {
  CHECK(rising_factorial(P("7/3"), 0) == S(1));
  CHECK(rising_factorial(P("3/2"), 2) == P("15/4"));
  CHECK(rising_factorial(S(-2), 3) == S(0));
  CHECK(qpochhammer(P("2/3"), P("1/5"), 0) == S(1));
  CHECK(qpochhammer(P("1/2"), P("1/2"), 2) == P("3/8"));
  CHECK(qpochhammer(S(0), P("1/3"), 6) == S(1));
  CHECK(qpochhammer({P("1/2"), P("1/3")}, P("1/2"), 2) == qpochhammer(P("1/2"), P("1/2"), 2) * qpochhammer(P("1/3"), P("1/2"), 2));
}

TEST_CASE("Laurent arithmetic examples") {
  const LaurentPoly zp = zpoly(-1, {S(1), S(0), S(1)});
  const LaurentPoly zm = zpoly(-1, {S(-1), S(0), S(1)});
  CHECK(zp * zm == zpoly(-2, {S(-1), 0, 0, 0, S(1)}));
  CHECK(zp + LaurentPoly(Var::Z) == zp);
  const S a = P("2/5");
  const LaurentPoly lhs = zpoly(0, {S(1), -a}) * zpoly(-1, {-a, S(1)});
  CHECK(lhs == zpoly(-1, {-a, S(1) + a * a, -a}));
  CHECK_THROWS_AS(laurent_arith(zp, xpoly({S(1), S(1)}), RingOp::Add), VariableMismatch);
  CHECK(zp.degree() == 1);
  CHECK(zp.valuation() == -1);
  CHECK((zp - zp).is_zero());
}

TEST_CASE("substitutions") {
  const LaurentPoly zp = zpoly(-1, {S(1), S(0), S(1)});
  CHECK(substitute_scale(zp, S(1)) == zp);
  CHECK(substitute_scale(zp, S(2)) == zpoly(-1, {P("1/2"), S(0), S(2)}));
  const S s = P("1/3");
  CHECK(substitute_scale(LaurentPoly::monomial(Var::Z, 2), s) == LaurentPoly::monomial(Var::Z, 2, s * s));
  CHECK_THROWS_AS(substitute_scale(zp, S(0)), ZeroScale);

  const LaurentPoly x2 = LaurentPoly::monomial(Var::X, 2);
  CHECK(substitute_shift(x2, S(0)) == x2);
  CHECK(substitute_shift(LaurentPoly::monomial(Var::X, 1), P("-1/2i")) == xpoly({P("-1/2i"), S(1)}));
  CHECK(substitute_shift(x2, P("-i")) == xpoly({S(-1), P("-2i"), S(1)}));
  CHECK_THROWS_AS(substitute_shift(LaurentPoly::monomial(Var::X, -1), S(1)), NegativeExponent);
}

TEST_CASE("star conjugation") {
  CHECK(star_conjugate(LaurentPoly::monomial(Var::X, 1, S::i())) == LaurentPoly::monomial(Var::X, 1, -S::i()));
  const S a = P("3/7");
  CHECK(star_conjugate(LaurentPoly::monomial(Var::Z, 1, a)) == LaurentPoly::monomial(Var::Z, -1, a));
  Gen g;
  for (int k = 0; k < 100; ++k) {
    const LaurentPoly p = g.laurent(Var::Z), r = g.laurent(Var::Z);
    CHECK(star_conjugate(star_conjugate(p)) == p);
    CHECK(star_conjugate(p * r) == star_conjugate(p) * star_conjugate(r));
  }
}

TEST_CASE("exact division") {
  const LaurentPoly num = zpoly(-2, {S(-1), 0, 0, 0, S(1)});
  const LaurentPoly den = zpoly(-1, {S(-1), S(0), S(1)});
  CHECK(exact_divide(num, den) == zpoly(-1, {S(1), S(0), S(1)}));
  CHECK(exact_divide(num, LaurentPoly::constant(Var::Z, 1)) == num);
  CHECK(exact_divide(LaurentPoly::monomial(Var::Z, 1), LaurentPoly::monomial(Var::Z, 2)) ==
        LaurentPoly::monomial(Var::Z, -1));
  CHECK_THROWS_AS(exact_divide(xpoly({S(1), S(0), S(1)}), xpoly({S(1), S(1)})), NotDivisible);
}

TEST_CASE("ring axioms on random Laurent polynomials") {
  Gen g;
  int cases = 0;
  for (int k = 0; k < 1200; ++k) {
    const Var v = k % 2 == 0 ? Var::Z : Var::X;
    const LaurentPoly a = g.laurent(v), b = g.laurent(v), c = g.laurent(v);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly(v));
    // evaluation is a ring homomorphism; a nonzero point avoids poles
    const S t = P("2/3+1/5i");
    CHECK((a * b).evaluate(t) == a.evaluate(t) * b.evaluate(t));
    if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
    ++cases;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("scale substitution composes multiplicatively") {
  Gen g;
  for (int k = 0; k < 100; ++k) {
    const LaurentPoly p = g.laurent(Var::Z);
    S c1 = g.scalar(), c2 = g.scalar();
    if (c1.is_zero()) c1 = S(3);
    if (c2.is_zero()) c2 = P("1/2");
    CHECK(substitute_scale(p, c1 * c2) == substitute_scale(substitute_scale(p, c1), c2));
  }
}

TEST_CASE("shift substitution agrees with evaluation") {
  Gen g;
  for (int k = 0; k < 100; ++k) {
    const LaurentPoly p = g.laurent(Var::X, false);
    const S c = g.scalar(), t = g.scalar();
    CHECK(substitute_shift(p, c).evaluate(t) == p.evaluate(t + c));
  }
}

TEST_CASE("rational functions") {
  const LaurentPoly n = xpoly({S(1), S(2)});
  const LaurentPoly d = xpoly({S(0), S(2), S(4)});
  const RationalFn r(n, d);
  CHECK(r.den().valuation() == 0);
  CHECK(r.den().leading() == S(1));
  CHECK(r == RationalFn(n * xpoly({S(3), S(1)}), d * xpoly({S(3), S(1)})));
  CHECK(RationalFn(d * n, d).to_polynomial() == n);
  CHECK_THROWS_AS(RationalFn(n, xpoly({S(1), S(1)})).to_polynomial(), NotDivisible);
  const RationalFn v(xpoly({S::i(), S(1)}), xpoly({S(1), P("2i")}));
  CHECK(v.star().star() == v);
  CHECK((v * v.star()).star() == v * v.star());
}

TEST_CASE("determinants") {
  ExactMatrix id3(3, std::vector<S>(3));
  for (int i = 0; i < 3; ++i) id3[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  CHECK(det(id3) == S(1));
  CHECK(det({{S(1), S(2)}, {S(3), S(4)}}) == S(-2));
  CHECK(det({{S(1), S(2), S(3)}, {P("1/2"), S::i(), S(0)}, {S(1), S(2), S(3)}}) == S(0));
  CHECK_THROWS_AS(det({{S(1), S(2)}}), NotSquare);
  CHECK_THROWS_AS(det(ExactMatrix{}), NotSquare);
  CHECK(det({{S(0), S(1)}, {S(1), S(0)}}) == S(-1));
}

TEST_CASE("determinant: cofactor oracle, multilinearity, alternation") {
  Gen g;
  auto rnd = [&](int n) {
    ExactMatrix m(static_cast<std::size_t>(n), std::vector<S>(static_cast<std::size_t>(n)));
    for (auto& row : m) {
      for (auto& v : row) v = g.scalar();
    }
    return m;
  };
  auto cofactor3 = [](const ExactMatrix& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  for (int k = 0; k < 100; ++k) {
    const ExactMatrix a = rnd(3);
    CHECK(det(a) == cofactor3(a));
    ExactMatrix swapped = a;
    std::swap(swapped[0], swapped[2]);
    CHECK(det(swapped) == -det(a));
    const ExactMatrix b = rnd(3);
    const S c = g.scalar();
    ExactMatrix mix = a;
    for (std::size_t j = 0; j < 3; ++j) mix[1][j] = a[1][j] + c * b[1][j];
    ExactMatrix bb = a;
    bb[1] = b[1];
    CHECK(det(mix) == det(a) + c * det(bb));
    const ExactMatrix two = rnd(2);
    CHECK(det(two) == two[0][0] * two[1][1] - two[0][1] * two[1][0]);
  }
}
