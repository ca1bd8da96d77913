#include "askey/family/representation.hpp"

#include "askey/errors.hpp"

namespace askey {

namespace {

LaurentPoly z_eta(const ExactScalar& w) {
  // (w z + (w z)^{-1}) / 2
  return LaurentPoly::from_coeffs(Var::Z, -1, {w.inverse() * ExactScalar::frac(1, 2), 0,
                                              w * ExactScalar::frac(1, 2)});
}

LaurentPoly z_varphi(const ExactScalar& w) {
  // -i (w z - (w z)^{-1})
  const ExactScalar i = ExactScalar::i();
  return LaurentPoly::from_coeffs(Var::Z, -1, {i * w.inverse(), 0, -i * w});
}

ExactScalar twist(const FamilyDescriptor& f, const ParamBinding& p) {
  return f.cls == CoordClass::IV ? p.w() : ExactScalar(1);
}

/// Symmetric Laurent polynomial in z -> coefficients in eta = (z + 1/z)/2.
std::vector<ExactScalar> symmetric_to_eta(LaurentPoly p) {
  if (p.is_zero()) return {};
  const int d = p.degree();
  if (p.valuation() != -d) throw ConversionFailure("not symmetric: " + p.to_string());
  std::vector<ExactScalar> out(static_cast<std::size_t>(d) + 1);
  const LaurentPoly eta = z_eta(ExactScalar(1));
  std::vector<LaurentPoly> powers{LaurentPoly::constant(Var::Z, 1)};
  for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * eta);
  for (int k = d; k >= 0 && !p.is_zero(); --k) {
    if (p.degree() > k || p.valuation() < -k) {
      throw ConversionFailure("not expressible in eta: " + p.to_string());
    }
    // eta^k has z^k coefficient 2^{-k}
    ExactScalar c = p.coeff(k) * ExactScalar(2).pow(k);
    out[static_cast<std::size_t>(k)] = c;
    p -= powers[static_cast<std::size_t>(k)] * c;
  }
  if (!p.is_zero()) throw ConversionFailure("residual after eta conversion: " + p.to_string());
  return out;
}

}  // namespace

Representation representation_of(const FamilyDescriptor& f, const ParamBinding& p) {
  switch (f.cls) {
    case CoordClass::I:
      return {Var::X, LaurentPoly::monomial(Var::X, 1), LaurentPoly::constant(Var::X, 1)};
    case CoordClass::II:
      return {Var::X, LaurentPoly::monomial(Var::X, 2), LaurentPoly::monomial(Var::X, 1, 2)};
    case CoordClass::III:
    case CoordClass::IV: {
      const ExactScalar w = twist(f, p);
      return {Var::Z, z_eta(w), z_varphi(w)};
    }
    case CoordClass::Oqm:
      return {Var::X, LaurentPoly::monomial(Var::X, 1), LaurentPoly::constant(Var::X, 1)};
  }
  throw Error("unknown class");
}

LaurentPoly half_shift(const FamilyDescriptor& f, const ParamBinding& p, const LaurentPoly& poly,
                       int sign) {
  switch (f.cls) {
    case CoordClass::I:
    case CoordClass::II:
      // e^{a p} f(x) = f(x - i a)
      return substitute_shift(poly, ExactScalar(Rational(0), Rational(-sign, 2)));
    case CoordClass::III:
    case CoordClass::IV:
      return substitute_scale(poly, sign > 0 ? p.s() : p.s().inverse());
    case CoordClass::Oqm:
      break;
  }
  throw NotIdQM(f.tag + " has no difference shifts");
}

LaurentPoly full_shift(const FamilyDescriptor& f, const ParamBinding& p, const LaurentPoly& poly,
                       int sign) {
  switch (f.cls) {
    case CoordClass::I:
    case CoordClass::II:
      return substitute_shift(poly, ExactScalar(Rational(0), Rational(-sign)));
    case CoordClass::III:
    case CoordClass::IV:
      return substitute_scale(poly, sign > 0 ? p.q() : p.q().inverse());
    case CoordClass::Oqm:
      break;
  }
  throw NotIdQM(f.tag + " has no difference shifts");
}

std::vector<ExactScalar> to_eta_basis(const FamilyDescriptor& f, const ParamBinding& p,
                                      const LaurentPoly& poly) {
  if (poly.is_zero()) return {};
  switch (f.cls) {
    case CoordClass::I:
    case CoordClass::Oqm: {
      if (poly.has_negative_exponents()) throw ConversionFailure("negative powers of x");
      std::vector<ExactScalar> out;
      for (int k = 0; k <= poly.degree(); ++k) out.push_back(poly.coeff(k));
      return out;
    }
    case CoordClass::II: {
      if (poly.has_negative_exponents()) throw ConversionFailure("negative powers of x");
      std::vector<ExactScalar> out;
      for (int k = 0; k <= poly.degree(); ++k) {
        if (k % 2 == 1) {
          if (!poly.coeff(k).is_zero()) throw ConversionFailure("odd power of x: " + poly.to_string());
        } else {
          out.push_back(poly.coeff(k));
        }
      }
      return out;
    }
    case CoordClass::III:
      return symmetric_to_eta(poly);
    case CoordClass::IV:
      // with z' = w z the class-iv eta becomes the class-iii one
      return symmetric_to_eta(substitute_scale(poly, p.w().inverse()));
  }
  throw Error("unknown class");
}

LaurentPoly from_eta_basis(const FamilyDescriptor& f, const ParamBinding& p,
                           const std::vector<ExactScalar>& coeffs) {
  const Representation r = representation_of(f, p);
  LaurentPoly acc(r.var);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * r.eta + LaurentPoly::constant(r.var, coeffs[k]);
  }
  return acc;
}

LaurentPoly eta_poly(const std::vector<ExactScalar>& coeffs) {
  return LaurentPoly::from_coeffs(Var::X, 0, coeffs);
}

ExactScalar eval_rep(const LaurentPoly& poly, const ExactScalar& rep) { return poly.evaluate(rep); }

}  // namespace askey
