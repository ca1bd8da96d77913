#pragma once

#include <vector>

#include "askey/family/family.hpp"

namespace askey {

struct Representation {
  Var var;
  LaurentPoly eta;
  LaurentPoly varphi;  // 1 for oQM, where it plays no role
};

Representation representation_of(const FamilyDescriptor& f, const ParamBinding& p);

/// e^{sign * gamma p / 2} applied to a representation polynomial.
LaurentPoly half_shift(const FamilyDescriptor& f, const ParamBinding& p, const LaurentPoly& poly,
                       int sign);
/// e^{sign * gamma p}.
LaurentPoly full_shift(const FamilyDescriptor& f, const ParamBinding& p, const LaurentPoly& poly,
                       int sign);

/// Coefficients c_k with poly = sum_k c_k eta^k; throws ConversionFailure.
std::vector<ExactScalar> to_eta_basis(const FamilyDescriptor& f, const ParamBinding& p,
                                      const LaurentPoly& poly);
LaurentPoly from_eta_basis(const FamilyDescriptor& f, const ParamBinding& p,
                           const std::vector<ExactScalar>& coeffs);

/// sum_k c_k eta^k as a polynomial in eta itself (Var::X).
LaurentPoly eta_poly(const std::vector<ExactScalar>& coeffs);

/// The point in the representation variable at which eta takes the value eta_j
/// is the ZeroPoint::rep field; this evaluates a representation polynomial there.
ExactScalar eval_rep(const LaurentPoly& poly, const ExactScalar& rep);

}  // namespace askey
