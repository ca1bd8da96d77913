#pragma once

#include "askey/family/family.hpp"
#include "askey/outcome.hpp"

namespace askey {

/// F(lambda) on a representation polynomial; throws NotDivisible.
LaurentPoly forward_shift(const FamilyDescriptor& f, const ParamBinding& p, const LaurentPoly& poly);
/// B(lambda), taking a polynomial of the lambda + delta family.
LaurentPoly backward_shift(const FamilyDescriptor& f, const ParamBinding& p, const LaurentPoly& poly);
LaurentPoly apply_Htilde(const FamilyDescriptor& f, const ParamBinding& p, const LaurentPoly& poly);

/// kappa^{1/2} + kappa^{-1/2}
ExactScalar kappa_sum(const FamilyDescriptor& f, const ParamBinding& p);
/// kappa^{-1}
ExactScalar kappa_inverse(const FamilyDescriptor& f, const ParamBinding& p);

/// H P_n = E_n P_n.
VerificationOutcome verify_eigen(const FamilyDescriptor& f, const ParamBinding& p, int n);
/// F P_n = f_n P_{n-1}(lambda+delta), B P_{n-1}(lambda+delta) = b_{n-1} P_n,
/// f_n b_{n-1} = E_n and B F P_n = H P_n; n >= 1.
VerificationOutcome verify_shift_relations(const FamilyDescriptor& f, const ParamBinding& p, int n);
/// Half-shift sum of varphi and the F(lambda+delta) F(lambda) operator identity
/// on eta^0..eta^K.
VerificationOutcome verify_prop3(const FamilyDescriptor& f, const ParamBinding& p, int K);
/// FF P_{n+2} = f_{n+1}(lambda+delta) f_{n+2} P_n(lambda+2 delta).
VerificationOutcome verify_double_forward(const FamilyDescriptor& f, const ParamBinding& p, int n);
VerificationOutcome verify_theorem4(const FamilyDescriptor& f, const ParamBinding& p, int n);
VerificationOutcome verify_theorem8(const FamilyDescriptor& f, const ParamBinding& p, int n);

}  // namespace askey
