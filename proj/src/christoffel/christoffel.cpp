#include "askey/christoffel.hpp"

#include <algorithm>

#include "askey/errors.hpp"
#include "askey/exact/matrix.hpp"
#include "askey/family/representation.hpp"
#include "askey/operators.hpp"

namespace askey {

namespace {

using S = ExactScalar;

/// Value of the d-th eta-derivative of poly at zero z.
S zero_value(const FamilyDescriptor& f, const ParamBinding& p, const LaurentPoly& poly, const ZeroPoint& z,
             int d) {
  if (d == 0) return eval_rep(poly, z.rep);
  LaurentPoly e = eta_poly(to_eta_basis(f, p, poly));
  for (int k = 0; k < d; ++k) e = e.derivative();
  return e.evaluate(z.eta);
}

struct Row {
  const ZeroPoint* zero;
  int order;
};

std::vector<Row> expand_rows(const std::vector<ZeroPoint>& zeros) {
  std::vector<Row> rows;
  for (const ZeroPoint& z : zeros) {
    for (int d = 0; d < z.multiplicity; ++d) rows.push_back({&z, d});
  }
  return rows;
}

std::vector<LaurentPoly> build_range(const FamilyDescriptor& f, const ParamBinding& p, int n, int count) {
  std::vector<LaurentPoly> out;
  for (int k = 0; k < count; ++k) out.push_back(f.build(p, n + k));
  return out;
}

/// Raw determinant matrix rows x ells; ells index into polys.
ExactMatrix raw_matrix(const FamilyDescriptor& f, const ParamBinding& p, const std::vector<Row>& rows,
                       const std::vector<LaurentPoly>& polys, const std::vector<int>& ells) {
  ExactMatrix m;
  for (const Row& r : rows) {
    std::vector<S> row;
    for (int l : ells) row.push_back(zero_value(f, p, polys[static_cast<std::size_t>(l)], *r.zero, r.order));
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<int> without(int m, int k) {
  std::vector<int> out;
  for (int l = 0; l <= m; ++l) {
    if (l != k) out.push_back(l);
  }
  return out;
}

std::string scalar_mismatch(const std::string& what, const S& got, const S& want) {
  return what + ": determinant " + got.to_string() + " vs printed " + want.to_string();
}

void require_real_aw(const ParamBinding& p) {
  for (int j = 1; j <= 4; ++j) {
    if (!p.at("a" + std::to_string(j)).is_real()) throw NonRealParameter("a" + std::to_string(j) + " is not real");
  }
}

S aw_slot(const ParamBinding& p, int j) { return p.at("a" + std::to_string(j)); }

S aw_b4(const ParamBinding& p) { return aw_slot(p, 1) * aw_slot(p, 2) * aw_slot(p, 3) * aw_slot(p, 4); }

ParamBinding aw_single(const ParamBinding& p, int j) {
  ParamBinding out = p;
  out.values["a" + std::to_string(j)] = aw_slot(p, j) * p.q();
  return out;
}

S aw_alpha0(const ParamBinding& p, int j, int n) {
  const S aj = aw_slot(p, j);
  const S qn = p.q().pow(n);
  S num(1);
  for (int k = 1; k <= 4; ++k) num *= S(1) - aj * aw_slot(p, k) * qn;
  return -num / (aj * (S(1) - aj * aj * qn));
}

S aw_beta(const ParamBinding& p, int j, int n) {
  return -aw_slot(p, j) / (S(1) - aw_b4(p) * p.q().pow(2 * n));
}

LaurentPoly aw_phi_j(const ParamBinding& p, int j) {
  const S a = aw_slot(p, j);
  return LaurentPoly::from_coeffs(Var::Z, -1, {-a, S(1) + a * a, -a});
}

}  // namespace

ParamBinding christoffel_shift(const FamilyDescriptor& f, const ParamBinding& p) {
  return f.shift(p, f.is_idqm() ? 2 : 1);
}

LaurentPoly assemble_phi(const FamilyDescriptor& f, const ParamBinding& p) {
  if (!f.is_idqm()) {
    const OqmData o = f.oqm(p);
    return o.c2 * (S(4) / (o.c_F * o.c_F));
  }
  const Representation r = representation_of(f, p);
  const RationalFn v = f.potential(p);
  const RationalFn vs = v.star();
  const LaurentPoly num = r.varphi * r.varphi * half_shift(f, p, r.varphi, 1) * half_shift(f, p, r.varphi, -1) *
                          v.num() * vs.num() * kappa_inverse(f, p);
  LaurentPoly out;
  if (!try_exact_divide(num, v.den() * vs.den(), out)) throw DegreeMismatch(f.tag + ": Phi is not a polynomial");
  return out;
}

PhiFactorization compute_phi(const FamilyDescriptor& f, const ParamBinding& p) {
  PhiFactorization out;
  out.phi = assemble_phi(f, p);
  std::vector<S> eta;
  try {
    eta = to_eta_basis(f, p, out.phi);
  } catch (const ConversionFailure& e) {
    throw DegreeMismatch(f.tag + ": Phi is not a polynomial in eta: " + e.what());
  }
  out.m = static_cast<int>(eta.size()) - 1;
  if (out.m != f.m) {
    throw DegreeMismatch(f.tag + ": Phi has eta-degree " + std::to_string(out.m) + ", expected " + std::to_string(f.m));
  }
  out.c_phi = eta.back();
  if (out.c_phi != f.c_phi(p)) {
    throw DegreeMismatch(f.tag + ": c^Phi " + out.c_phi.to_string() + " vs " + f.c_phi(p).to_string());
  }
  out.zeros = f.zeros(p);
  int total = 0;
  for (const ZeroPoint& z : out.zeros) {
    total += z.multiplicity;
    for (int d = 0; d < z.multiplicity; ++d) {
      if (!zero_value(f, p, out.phi, z, d).is_zero()) {
        throw DegreeMismatch(f.tag + ": Phi does not vanish at eta = " + z.eta.to_string());
      }
    }
    if (eval_rep(representation_of(f, p).eta, z.rep) != z.eta) {
      throw DegreeMismatch(f.tag + ": zero point and eta value disagree");
    }
  }
  if (total != out.m) throw DegreeMismatch(f.tag + ": zero multiplicities do not add up to m");
  return out;
}

bool trivial_phi_check(const FamilyDescriptor& f, const ParamBinding& p) {
  return assemble_phi(f, p) == LaurentPoly::constant(f.is_idqm() ? representation_of(f, p).var : Var::X, 1);
}

ExactScalar D_matrix_det(const FamilyDescriptor& f, const ParamBinding& p, int n, const std::vector<int>& ells) {
  const std::vector<ZeroPoint> zeros = f.zeros(p);
  const std::vector<Row> rows = expand_rows(zeros);
  if (rows.size() != ells.size()) throw NotSquare();
  const int top = *std::max_element(ells.begin(), ells.end());
  const std::vector<LaurentPoly> polys = build_range(f, p, n, top + 1);
  ExactMatrix m = raw_matrix(f, p, rows, polys, ells);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const S d = zero_value(f, p, polys[0], *rows[i].zero, rows[i].order);
    if (d.is_zero()) throw ZeroDenominator(f.tag + ": P_n vanishes at eta = " + rows[i].zero->eta.to_string());
    for (S& v : m[i]) v /= d;
  }
  return det(m);
}

ChristoffelCoefficients alpha_from_determinants(const FamilyDescriptor& f, const ParamBinding& p, int n) {
  const PhiFactorization phi = compute_phi(f, p);
  const int m = phi.m;
  const std::vector<Row> rows = expand_rows(phi.zeros);
  const std::vector<LaurentPoly> polys = build_range(f, p, n, m + 1);
  for (const Row& r : rows) {
    if (r.order == 0 && zero_value(f, p, polys[0], *r.zero, 0).is_zero()) {
      throw ZeroDenominator(f.tag + ": P_n vanishes at eta = " + r.zero->eta.to_string());
    }
  }
  ChristoffelCoefficients c;
  c.n = n;
  c.alpha.resize(static_cast<std::size_t>(m) + 1);
  const S base = m == 0 ? S(1) : det(raw_matrix(f, p, rows, polys, without(m, m)));
  if (base.is_zero()) throw ZeroDenominator(f.tag + ": D_n^{(0..m-1)} vanishes");
  c.alpha[static_cast<std::size_t>(m)] = 1;
  for (int k = 0; k < m; ++k) {
    const S sign((m - k) % 2 == 0 ? 1 : -1);
    c.alpha[static_cast<std::size_t>(k)] = sign * det(raw_matrix(f, p, rows, polys, without(m, k))) / base;
  }
  const ParamBinding shifted = christoffel_shift(f, p);
  c.beta = phi.c_phi * f.leading(shifted, n) / f.leading(p, n + m);
  if (f.is_idqm()) {
    c.beta_F = f.spectral(f.shift(p, 1), n + 1).f * f.spectral(p, n + 2).f * c.beta;
  } else {
    c.beta_F = f.spectral(p, n + 1).f * c.beta;
  }
  return c;
}

ChristoffelCoefficients alpha_closed_form(const FamilyDescriptor& f, const ParamBinding& p, int n) {
  if (!f.closed_form) throw Error(f.tag + " has no printed Christoffel data");
  const ClosedForm cf = f.closed_form(p, n);
  return {n, cf.alpha, cf.beta, cf.beta_F};
}

LaurentPoly expansion_residual(const FamilyDescriptor& f, const ParamBinding& p, const ChristoffelCoefficients& c) {
  const LaurentPoly lhs = assemble_phi(f, p) * f.build(christoffel_shift(f, p), c.n);
  LaurentPoly rhs(lhs.var());
  for (std::size_t k = 0; k < c.alpha.size(); ++k) rhs += f.build(p, c.n + static_cast<int>(k)) * c.alpha[k];
  return lhs - rhs * c.beta;
}

VerificationOutcome verify_expansion(const FamilyDescriptor& f, const ParamBinding& p, int n) {
  if (f.trivial_phi()) return VerificationOutcome::skipped("trivial Phi = 1");
  const LaurentPoly det_res = expansion_residual(f, p, alpha_from_determinants(f, p, n));
  if (!det_res.is_zero()) return VerificationOutcome::fail("determinant path: " + det_res.to_string());
  const LaurentPoly cf_res = expansion_residual(f, p, alpha_closed_form(f, p, n));
  if (!cf_res.is_zero()) return VerificationOutcome::fail("printed path: " + cf_res.to_string());
  return VerificationOutcome::pass();
}

VerificationOutcome compare_coefficients(const FamilyDescriptor& f, const ParamBinding& p, int n) {
  if (f.trivial_phi()) return VerificationOutcome::skipped("trivial Phi = 1");
  const ChristoffelCoefficients d = alpha_from_determinants(f, p, n);
  const ClosedForm cf = f.closed_form(p, n);
  if (cf.alpha.size() != d.alpha.size()) return VerificationOutcome::fail("printed alpha has wrong length");
  for (std::size_t k = 0; k < d.alpha.size(); ++k) {
    if (d.alpha[k] != cf.alpha[k]) {
      return VerificationOutcome::fail(scalar_mismatch("alpha_" + std::to_string(k), d.alpha[k], cf.alpha[k]));
    }
  }
  if (d.beta != cf.beta) return VerificationOutcome::fail(scalar_mismatch("beta", d.beta, cf.beta));
  if (d.beta_F != cf.beta_F) return VerificationOutcome::fail(scalar_mismatch("beta_F", d.beta_F, cf.beta_F));
  if (cf.D) {
    std::vector<int> ells(static_cast<std::size_t>(f.m));
    for (int l = 0; l < f.m; ++l) ells[static_cast<std::size_t>(l)] = l;
    const S dd = D_matrix_det(f, p, n, ells);
    if (dd != *cf.D) return VerificationOutcome::fail(scalar_mismatch("D", dd, *cf.D));
  }
  const std::vector<ZeroPoint> zeros = f.zeros(p);
  const LaurentPoly pn = f.build(p, n);
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    if (f.value_at_zero) {
      const S got = eval_at_special_point(f, p, n, static_cast<int>(j));
      const S want = f.value_at_zero(p, static_cast<int>(j), n);
      if (got != want) return VerificationOutcome::fail(scalar_mismatch("P_n(x_" + std::to_string(j + 1) + ")", got, want));
    }
    if (zeros[j].multiplicity > 1 && f.derivative_at_zero) {
      const S got = zero_value(f, p, pn, zeros[j], 1);
      const S want = f.derivative_at_zero(p, n);
      if (got != want) return VerificationOutcome::fail(scalar_mismatch("P_n'", got, want));
    }
  }
  return VerificationOutcome::pass();
}

VerificationOutcome verify_phi(const FamilyDescriptor& f, const ParamBinding& p) {
  if (f.trivial_phi()) {
    return trivial_phi_check(f, p) ? VerificationOutcome::pass()
                                   : VerificationOutcome::fail("Phi = " + assemble_phi(f, p).to_string());
  }
  try {
    compute_phi(f, p);
  } catch (const DegreeMismatch& e) {
    return VerificationOutcome::fail(e.what());
  }
  return VerificationOutcome::pass();
}

VerificationOutcome single_shift_aw(const ParamBinding& p, int j, int n) {
  if (!aw_slot(p, j).is_real()) throw NonRealParameter("a" + std::to_string(j) + " is not real");
  const FamilyDescriptor& f = family(FamilyId::AW);
  const ParamBinding pj = aw_single(p, j);
  const S a0 = aw_alpha0(p, j, n);
  const S b = aw_beta(p, j, n);
  const LaurentPoly pn = f.build(p, n);
  const LaurentPoly pn1 = f.build(p, n + 1);
  const LaurentPoly res = aw_phi_j(p, j) * f.build(pj, n) - (pn * a0 + pn1) * b;
  if (!res.is_zero()) return VerificationOutcome::fail(res.to_string());
  const ZeroPoint z = f.zeros(p)[static_cast<std::size_t>(j - 1)];
  const S ratio = -eval_rep(pn1, z.rep) / eval_rep(pn, z.rep);
  if (ratio != a0) return VerificationOutcome::fail(scalar_mismatch("alpha^(j)_0", ratio, a0));
  const S bd = S(-2) * aw_slot(p, j) * f.leading(pj, n) / f.leading(p, n + 1);
  if (bd != b) return VerificationOutcome::fail(scalar_mismatch("beta^(j)", bd, b));
  return VerificationOutcome::pass();
}

VerificationOutcome composition_check_aw(const ParamBinding& p, int n) {
  require_real_aw(p);
  const FamilyDescriptor& f = family(FamilyId::AW);
  const ParamBinding l1 = aw_single(p, 1);
  const ParamBinding l12 = aw_single(l1, 2);
  const ParamBinding l123 = aw_single(l12, 3);

  auto t1 = [&](int k) { return aw_alpha0(p, 1, k); };
  auto t2 = [&](int k) { return aw_alpha0(l1, 2, k) * aw_beta(p, 1, k) / aw_beta(p, 1, k + 1); };
  auto t3 = [&](int k) {
    return aw_alpha0(l12, 3, k) * aw_beta(p, 1, k + 1) / aw_beta(p, 1, k + 2) * aw_beta(l1, 2, k) /
           aw_beta(l1, 2, k + 1);
  };
  auto t4 = [&](int k) {
    return aw_alpha0(l123, 4, k) * aw_beta(p, 1, k + 2) / aw_beta(p, 1, k + 3) * aw_beta(l1, 2, k + 1) /
           aw_beta(l1, 2, k + 2) * aw_beta(l12, 3, k) / aw_beta(l12, 3, k + 1);
  };

  std::vector<S> alpha(5);
  alpha[4] = 1;
  alpha[3] = t1(n + 3) + t2(n + 2) + t3(n + 1) + t4(n);
  alpha[2] = t1(n + 2) * t2(n + 2) + t1(n + 2) * t3(n + 1) + t1(n + 2) * t4(n) + t2(n + 1) * t3(n + 1) +
             t2(n + 1) * t4(n) + t3(n) * t4(n);
  alpha[1] = t1(n + 1) * t2(n + 1) * t3(n + 1) + t1(n + 1) * t2(n + 1) * t4(n) + t1(n + 1) * t3(n) * t4(n) +
             t2(n) * t3(n) * t4(n);
  alpha[0] = t1(n) * t2(n) * t3(n) * t4(n);
  const S beta = aw_beta(p, 1, n + 3) * aw_beta(l1, 2, n + 2) * aw_beta(l12, 3, n + 1) * aw_beta(l123, 4, n);

  const ClosedForm cf = f.closed_form(p, n);
  for (std::size_t k = 0; k < 5; ++k) {
    if (alpha[k] != cf.alpha[k]) {
      return VerificationOutcome::fail("alpha_" + std::to_string(k) + ": composed " + alpha[k].to_string() +
                                       " vs " + cf.alpha[k].to_string());
    }
  }
  if (beta != cf.beta) return VerificationOutcome::fail("beta: composed " + beta.to_string() + " vs " + cf.beta.to_string());

  const LaurentPoly prod = aw_phi_j(p, 1) * aw_phi_j(l1, 2) * aw_phi_j(l12, 3) * aw_phi_j(l123, 4);
  if (prod != assemble_phi(f, p)) return VerificationOutcome::fail("staged Phi^(j) product differs from Phi");
  S cphi(1);
  for (int j = 1; j <= 4; ++j) cphi *= S(-2) * aw_slot(p, j);
  if (cphi != f.c_phi(p)) return VerificationOutcome::fail("prod c^Phi(j) differs from c^Phi");
  return VerificationOutcome::pass();
}

bool diagonal_nonvanishing(const FamilyDescriptor& f, const ParamBinding& p, int n) {
  if (!f.physical(p)) throw NonPhysicalBinding(p.digest() + " is outside the physical range");
  const ClosedForm cf = f.closed_form(p, n);
  return !(cf.beta * cf.alpha[0]).is_zero();
}

}  // namespace askey
