#include <doctest.h>

#include "askey/errors.hpp"
#include "askey/family/family.hpp"
#include "askey/family/representation.hpp"

using namespace askey;
using S = ExactScalar;

namespace {

S P(const char* t) { return S::parse(t); }
const ParamBinding& first(FamilyId id) {
  static std::map<FamilyId, ParamBinding> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, family(id).default_bindings().front()).first;
  return it->second;
}
LaurentPoly eta_of(std::vector<S> c) { return LaurentPoly::from_coeffs(Var::X, 0, std::move(c)); }

}  // namespace

TEST_CASE("catalog") {
  CHECK(catalog().size() == 18);
  CHECK(family("cqJ").id == FamilyId::cqJ);
  CHECK(family("c\U0001D45EJ").id == FamilyId::cqJ);
  CHECK(family("c\U0001D45EHe").id == FamilyId::cqHe);
  CHECK_THROWS(family("XY"));
  int trivial = 0;
  for (const auto& f : catalog()) {
    CHECK(family_tag(f.id) == f.tag);
    CHECK(!f.default_bindings().empty());
    if (f.trivial_phi()) ++trivial;
    const bool q_class = f.cls == CoordClass::III || f.cls == CoordClass::IV;
    CHECK(f.kappa_is_q_inverse() == q_class);
    CHECK(f.is_idqm() == (f.cls != CoordClass::Oqm));
  }
  CHECK(trivial == 2);
  CHECK(family(FamilyId::AW).m == 4);
  CHECK(family(FamilyId::cbqHe).m == 1);
  CHECK(family(FamilyId::B).m == 2);
}

TEST_CASE("bindings") {
  CHECK(pythagorean_unit(2, 1) == P("3/5+4/5i"));
  CHECK(pythagorean_unit(3, 2).norm() == 1);
  CHECK(conjugation_closed({P("1+i"), S(2), P("1-i")}));
  CHECK_FALSE(conjugation_closed({P("1+i"), S(2), P("1+i")}));

  const ParamBinding w = make_binding(FamilyId::W, {{"a1", "1/2+1/3i"}, {"a2", "1/2-1/3i"}, {"a3", "1"}, {"a4", "2"}});
  CHECK(w.at("a1") == P("1/2+1/3i"));
  CHECK_THROWS_AS(make_binding(FamilyId::W, {{"a1", "1/2+1/3i"}, {"a2", "1/2"}, {"a3", "1"}, {"a4", "2"}}),
                  InvalidBinding);
  CHECK_THROWS_AS(make_binding(FamilyId::L, {{"g", "1"}, {"k", "2"}}), InvalidBinding);
  CHECK_THROWS_AS(make_binding(FamilyId::MP, {{"a", "1"}, {"w", "1/2+1/2i"}}), InvalidBinding);
  CHECK_THROWS_AS(make_binding(FamilyId::L, {}), UnboundParameter);
  const ParamBinding aw = make_binding(FamilyId::AW, {{"a1", "1/2"}, {"a2", "1/3"}, {"a3", "-1/5"}, {"a4", "1/7"},
                                                      {"s", "1/2"}});
  CHECK(aw.q() == P("1/4"));
  CHECK(aw.digest() == first(FamilyId::AW).digest());
}

TEST_CASE("representations") {
  const auto& aw = family(FamilyId::AW);
  const Representation ra = representation_of(aw, first(FamilyId::AW));
  CHECK(ra.var == Var::Z);
  CHECK(ra.eta == LaurentPoly::from_coeffs(Var::Z, -1, {P("1/2"), S(0), P("1/2")}));
  CHECK(ra.varphi == LaurentPoly::from_coeffs(Var::Z, -1, {S::i(), S(0), -S::i()}));

  const Representation rm = representation_of(family(FamilyId::MP), first(FamilyId::MP));
  CHECK(rm.var == Var::X);
  CHECK(rm.eta == LaurentPoly::monomial(Var::X, 1));
  CHECK(rm.varphi == LaurentPoly::constant(Var::X, 1));

  const Representation rw = representation_of(family(FamilyId::W), first(FamilyId::W));
  CHECK(rw.eta == LaurentPoly::monomial(Var::X, 2));
  CHECK(rw.varphi == LaurentPoly::monomial(Var::X, 1, S(2)));

  const ParamBinding& qh = first(FamilyId::cqH);
  const Representation rq = representation_of(family(FamilyId::cqH), qh);
  const S w = qh.w();
  CHECK(rq.eta == LaurentPoly::from_coeffs(Var::Z, -1, {w.inverse() / 2, S(0), w / 2}));

  const OqmData j = family(FamilyId::J).oqm(first(FamilyId::J));
  CHECK(j.c2 == eta_of({S(1), S(0), S(-1)}));
}

TEST_CASE("shift actions") {
  for (FamilyId id : {FamilyId::MP, FamilyId::W, FamilyId::AW, FamilyId::cqH}) {
    const auto& f = family(id);
    const ParamBinding& p = first(id);
    const LaurentPoly pn = f.build(p, 3);
    CHECK(half_shift(f, p, half_shift(f, p, pn, 1), 1) == full_shift(f, p, pn, 1));
    CHECK(half_shift(f, p, half_shift(f, p, pn, -1), 1) == pn);
  }
  const auto& mp = family(FamilyId::MP);
  CHECK(half_shift(mp, first(FamilyId::MP), LaurentPoly::monomial(Var::X, 1), 1) ==
        LaurentPoly::from_coeffs(Var::X, 0, {P("-1/2i"), S(1)}));
  const auto& aw = family(FamilyId::AW);
  CHECK(half_shift(aw, first(FamilyId::AW), LaurentPoly::monomial(Var::Z, 1), 1) ==
        LaurentPoly::monomial(Var::Z, 1, P("1/2")));
}

TEST_CASE("eta basis conversion") {
  const auto& aw = family(FamilyId::AW);
  const ParamBinding& p = first(FamilyId::AW);
  const std::vector<S> c{P("1/3"), S(-2), S(0), P("5/7")};
  CHECK(to_eta_basis(aw, p, from_eta_basis(aw, p, c)) == c);
  CHECK_THROWS_AS(to_eta_basis(aw, p, LaurentPoly::monomial(Var::Z, 1)), ConversionFailure);
  CHECK(eta_poly(c) == eta_of(c));
}

TEST_CASE("built polynomials") {
  for (const auto& f : catalog()) {
    for (const auto& p : f.default_bindings()) CHECK(f.build(p, 0) == LaurentPoly::constant(f.build(p, 0).var(), 1));
  }
  const auto& he = family(FamilyId::He);
  const ParamBinding& hp = first(FamilyId::He);
  CHECK(he.build(hp, 2) == eta_of({S(-2), S(0), S(4)}));
  // three-term recurrence H_{n+1} = 2 eta H_n - 2n H_{n-1}
  LaurentPoly a = eta_of({S(1)}), b = eta_of({S(0), S(2)});
  for (int n = 1; n <= 8; ++n) {
    CHECK(he.build(hp, n) == b);
    const LaurentPoly next = eta_of({S(0), S(2)}) * b - a * S(2 * n);
    a = b;
    b = next;
  }
  const auto& l = family(FamilyId::L);
  CHECK(l.build(make_binding(FamilyId::L, {{"g", "1"}}), 1) == eta_of({P("3/2"), S(-1)}));

  // z -> 1/z symmetry for a class iii family with real parameters
  const auto& aw = family(FamilyId::AW);
  const LaurentPoly p5 = aw.build(first(FamilyId::AW), 5);
  for (int k = 0; k <= 5; ++k) CHECK(p5.coeff(k) == p5.coeff(-k));
}

TEST_CASE("leading coefficients") {
  const ParamBinding& hp = first(FamilyId::He);
  const ParamBinding& jp = first(FamilyId::J);
  const ParamBinding& cp = first(FamilyId::cdH);
  for (int n = 0; n <= 8; ++n) {
    CHECK(family(FamilyId::He).build(hp, n).coeff(n) == S(2).pow(n));
    const S g = jp.at("g"), h = jp.at("h");
    const S cj = rising_factorial(S(n) + g + h, n) / (S(2).pow(n) * factorial(n));
    CHECK(family(FamilyId::J).build(jp, n).coeff(n) == cj);
    CHECK(family(FamilyId::cdH).build(cp, n).coeff(2 * n) == S(n % 2 == 0 ? 1 : -1));
  }
  for (const auto& f : catalog()) {
    for (const auto& p : f.default_bindings()) {
      for (int n = 0; n <= 6; ++n) CHECK_MESSAGE(leading_coefficient_check(f, p, n), f.tag << " n=" << n);
    }
  }
}

TEST_CASE("spectral data") {
  const ParamBinding& mp = first(FamilyId::MP);
  const S sinphi = (mp.w() - mp.w().conj()) / (S(2) * S::i());
  for (int n = 0; n <= 6; ++n) CHECK(family(FamilyId::MP).spectral(mp, n).E == S(2 * n) * sinphi);
  const ParamBinding& jp = first(FamilyId::J);
  const S g = jp.at("g"), h = jp.at("h");
  for (int n = 1; n <= 6; ++n) {
    const auto& j = family(FamilyId::J);
    CHECK(j.spectral(jp, n).E == S(4 * n) * (S(n) + g + h));
    CHECK(j.spectral(jp, n).f == S(-2) * (S(n) + g + h));
    CHECK(j.spectral(jp, n - 1).b == S(-2 * n));
  }
  for (const auto& f : catalog()) {
    for (const auto& p : f.default_bindings()) {
      CHECK(f.spectral(p, 0).E == S(0));
      for (int n = 1; n <= 6; ++n) CHECK(f.spectral(p, n).f * f.spectral(p, n - 1).b == f.spectral(p, n).E);
    }
  }
}

TEST_CASE("potentials") {
  const ParamBinding& bp = first(FamilyId::cbqHe);
  const S a = bp.at("a"), q = bp.q();
  const RationalFn v = family(FamilyId::cbqHe).potential(bp);
  const LaurentPoly num = LaurentPoly::from_coeffs(Var::Z, 0, {S(1), -a});
  const LaurentPoly den = LaurentPoly::from_coeffs(Var::Z, 0, {S(1), S(0), S(-1)}) *
                          LaurentPoly::from_coeffs(Var::Z, 0, {S(1), S(0), -q});
  CHECK(v == RationalFn(num, den));

  const ParamBinding& mp = first(FamilyId::MP);
  const RationalFn vm = family(FamilyId::MP).potential(mp);
  CHECK(vm == RationalFn(LaurentPoly::from_coeffs(Var::X, 0, {S::i() * mp.w().conj() * mp.at("a"),
                                                              S::i() * mp.w().conj() * S::i()})));

  const ParamBinding& wp = first(FamilyId::W);
  const RationalFn vw = family(FamilyId::W).potential(wp);
  LaurentPoly wn = LaurentPoly::constant(Var::X, 1);
  for (const char* k : {"a1", "a2", "a3", "a4"}) wn = wn * LaurentPoly::from_coeffs(Var::X, 0, {wp.at(k), S::i()});
  CHECK(vw == RationalFn(wn, LaurentPoly::from_coeffs(Var::X, 0, {S(0), P("2i"), S(-4)})));
  CHECK_THROWS_AS(family(FamilyId::J).potential(first(FamilyId::J)), NotIdQM);
}

TEST_CASE("special point values") {
  const auto& aw = family(FamilyId::AW);
  for (const auto& p : aw.default_bindings()) {
    const S a1 = p.at("a1"), q = p.q();
    for (int n = 0; n <= 6; ++n) {
      const S expect = a1.pow(-n) * qpochhammer({a1 * p.at("a2"), a1 * p.at("a3"), a1 * p.at("a4")}, q, n);
      CHECK(eval_at_special_point(aw, p, n, 0) == expect);
    }
  }
  const auto& j = family(FamilyId::J);
  const ParamBinding& jp = first(FamilyId::J);
  for (int n = 0; n <= 6; ++n) {
    const S sign(n % 2 == 0 ? 1 : -1);
    CHECK(j.build(jp, n).evaluate(S(1)) == rising_factorial(jp.at("g") + P("1/2"), n) / factorial(n));
    CHECK(j.build(jp, n).evaluate(S(-1)) == sign * rising_factorial(jp.at("h") + P("1/2"), n) / factorial(n));
  }
  const auto& pj = family(FamilyId::pJ);
  const ParamBinding& pp = first(FamilyId::pJ);
  const S h = pp.at("h"), mu = pp.at("mu");
  for (int n = 0; n <= 6; ++n) {
    for (int sg : {1, -1}) {
      const S is = S(sg) * S::i();
      const S expect = (S(2) * is).pow(n) * rising_factorial(-h + P("1/2") + is * mu, n) / rising_factorial(S(n) - S(2) * h, n);
      CHECK(pj.build(pp, n).evaluate(is) == expect);
    }
  }
  for (const auto& f : catalog()) {
    for (const auto& p : f.default_bindings()) {
      const auto z = f.zeros(p);
      for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k < static_cast<int>(z.size()); ++k) {
          CHECK_MESSAGE(eval_at_special_point(f, p, n, k) == f.value_at_zero(p, k, n), f.tag << " n=" << n);
        }
      }
      CHECK_THROWS_AS(eval_at_special_point(f, p, 1, static_cast<int>(z.size())), IndexOutOfRange);
    }
  }
}
