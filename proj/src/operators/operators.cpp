#include "askey/operators.hpp"

#include "askey/christoffel.hpp"
#include "askey/errors.hpp"
#include "askey/family/representation.hpp"

namespace askey {

namespace {

using S = ExactScalar;

struct Potential {
  LaurentPoly num, den, num_star, den_star;
};

Potential split_potential(const FamilyDescriptor& f, const ParamBinding& p) {
  const RationalFn v = f.potential(p);
  const RationalFn vs = v.star();
  return {v.num(), v.den(), vs.num(), vs.den()};
}

}  // namespace

ExactScalar kappa_sum(const FamilyDescriptor& f, const ParamBinding& p) {
  if (f.kappa_is_q_inverse()) return p.s() + p.s().inverse();
  return S(2);
}

ExactScalar kappa_inverse(const FamilyDescriptor& f, const ParamBinding& p) {
  return f.kappa_is_q_inverse() ? p.q() : S(1);
}

LaurentPoly forward_shift(const FamilyDescriptor& f, const ParamBinding& p, const LaurentPoly& poly) {
  if (!f.is_idqm()) return poly.derivative() * f.oqm(p).c_F;
  const Representation r = representation_of(f, p);
  const LaurentPoly diff = half_shift(f, p, poly, 1) - half_shift(f, p, poly, -1);
  return exact_divide(diff * S::i(), r.varphi);
}

LaurentPoly backward_shift(const FamilyDescriptor& f, const ParamBinding& p, const LaurentPoly& poly) {
  if (!f.is_idqm()) {
    const OqmData o = f.oqm(p);
    return (o.c2 * poly.derivative() + o.c1 * poly) * (S(-4) / o.c_F);
  }
  const Representation r = representation_of(f, p);
  const Potential v = split_potential(f, p);
  const LaurentPoly g = r.varphi * poly;
  const LaurentPoly num =
      v.num * v.den_star * half_shift(f, p, g, 1) - v.num_star * v.den * half_shift(f, p, g, -1);
  return exact_divide(num, v.den * v.den_star) * (-S::i());
}

LaurentPoly apply_Htilde(const FamilyDescriptor& f, const ParamBinding& p, const LaurentPoly& poly) {
  if (!f.is_idqm()) {
    const OqmData o = f.oqm(p);
    const LaurentPoly d1 = poly.derivative();
    return (o.c2 * d1.derivative() + o.c1 * d1) * S(-4);
  }
  const Potential v = split_potential(f, p);
  const LaurentPoly num = v.num * v.den_star * (full_shift(f, p, poly, 1) - poly) +
                          v.num_star * v.den * (full_shift(f, p, poly, -1) - poly);
  return exact_divide(num, v.den * v.den_star);
}

VerificationOutcome verify_eigen(const FamilyDescriptor& f, const ParamBinding& p, int n) {
  const LaurentPoly pn = f.build(p, n);
  return residual_outcome(apply_Htilde(f, p, pn) - pn * f.spectral(p, n).E);
}

VerificationOutcome verify_shift_relations(const FamilyDescriptor& f, const ParamBinding& p, int n) {
  const ParamBinding pd = f.shift(p, 1);
  const LaurentPoly pn = f.build(p, n);
  const LaurentPoly lower = f.build(pd, n - 1);
  const SpectralData sn = f.spectral(p, n);
  const SpectralData sm = f.spectral(p, n - 1);
  const LaurentPoly fp = forward_shift(f, p, pn);
  if (fp != lower * sn.f) return VerificationOutcome::fail("F: " + (fp - lower * sn.f).to_string());
  const LaurentPoly bp = backward_shift(f, p, lower);
  if (bp != pn * sm.b) return VerificationOutcome::fail("B: " + (bp - pn * sm.b).to_string());
  if (sn.f * sm.b != sn.E) {
    return VerificationOutcome::fail("f_n b_{n-1} - E_n = " + (sn.f * sm.b - sn.E).to_string());
  }
  const LaurentPoly bf = backward_shift(f, p, fp);
  if (bf != apply_Htilde(f, p, pn)) return VerificationOutcome::fail("BF != H");
  return VerificationOutcome::pass();
}

VerificationOutcome verify_prop3(const FamilyDescriptor& f, const ParamBinding& p, int K) {
  if (!f.is_idqm()) return VerificationOutcome::skipped("ordinary QM");
  const Representation r = representation_of(f, p);
  const LaurentPoly up = half_shift(f, p, r.varphi, 1);
  const LaurentPoly down = half_shift(f, p, r.varphi, -1);
  const S ks = kappa_sum(f, p);
  const LaurentPoly sum_residual = up + down - r.varphi * ks;
  if (!sum_residual.is_zero()) return VerificationOutcome::fail("half-shift sum: " + sum_residual.to_string());
  // phi(x + i gamma/2) is the e^{-gamma p/2} image, phi(x - i gamma/2) the e^{+gamma p/2} one
  const ParamBinding pd = f.shift(p, 1);
  LaurentPoly mono = LaurentPoly::constant(r.var, 1);
  for (int k = 0; k <= K; ++k) {
    const LaurentPoly lhs = forward_shift(f, pd, forward_shift(f, p, mono));
    const LaurentPoly rhs = r.varphi * mono * ks - down * full_shift(f, p, mono, 1) - up * full_shift(f, p, mono, -1);
    const LaurentPoly res = lhs * r.varphi * up * down - rhs;
    if (!res.is_zero()) return VerificationOutcome::fail("eta^" + std::to_string(k) + ": " + res.to_string());
    mono = mono * r.eta;
  }
  return VerificationOutcome::pass();
}

VerificationOutcome verify_double_forward(const FamilyDescriptor& f, const ParamBinding& p, int n) {
  const ParamBinding pd = f.shift(p, 1);
  const LaurentPoly lhs = forward_shift(f, pd, forward_shift(f, p, f.build(p, n + 2)));
  const S c = f.spectral(pd, n + 1).f * f.spectral(p, n + 2).f;
  return residual_outcome(lhs - f.build(f.shift(p, 2), n) * c);
}

VerificationOutcome verify_theorem4(const FamilyDescriptor& f, const ParamBinding& p, int n) {
  if (!f.is_idqm()) return VerificationOutcome::skipped("ordinary QM");
  if (f.trivial_phi()) return VerificationOutcome::skipped("trivial Phi = 1");
  const Representation r = representation_of(f, p);
  const Potential v = split_potential(f, p);
  const LaurentPoly up = half_shift(f, p, r.varphi, 1);
  const LaurentPoly down = half_shift(f, p, r.varphi, -1);
  const LaurentPoly top = f.build(p, n + 2);
  const LaurentPoly bracket = r.varphi * top * kappa_sum(f, p) - down * full_shift(f, p, top, 1) -
                              up * full_shift(f, p, top, -1);
  const LaurentPoly lhs = r.varphi * v.num * v.num_star * bracket * kappa_inverse(f, p);
  const ChristoffelCoefficients c = alpha_closed_form(f, p, n);
  LaurentPoly rhs(r.var);
  for (int k = 0; k <= f.m; ++k) rhs += f.build(p, n + k) * c.alpha[static_cast<std::size_t>(k)];
  rhs = rhs * c.beta_F * v.den * v.den_star;
  return residual_outcome(lhs - rhs);
}

VerificationOutcome verify_theorem8(const FamilyDescriptor& f, const ParamBinding& p, int n) {
  if (f.is_idqm()) return VerificationOutcome::skipped("difference family");
  if (f.trivial_phi()) return VerificationOutcome::skipped("trivial Phi = 1");
  const OqmData o = f.oqm(p);
  const LaurentPoly lhs = o.c2 * f.build(p, n + 1).derivative() * (S(4) / o.c_F);
  const ChristoffelCoefficients c = alpha_closed_form(f, p, n);
  LaurentPoly rhs(Var::X);
  for (int k = 0; k <= f.m; ++k) rhs += f.build(p, n + k) * c.alpha[static_cast<std::size_t>(k)];
  return residual_outcome(lhs - rhs * c.beta_F);
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

}  // namespace askey
