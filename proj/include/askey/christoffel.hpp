#pragma once

#include <vector>

#include "askey/family/family.hpp"
#include "askey/outcome.hpp"

namespace askey {

struct PhiFactorization {
  LaurentPoly phi;  // in the representation variable
  int m = 0;
  ExactScalar c_phi;
  std::vector<ZeroPoint> zeros;
};

struct ChristoffelCoefficients {
  int n = 0;
  std::vector<ExactScalar> alpha;  // alpha_{n,0..m}
  ExactScalar beta;
  ExactScalar beta_F;
};

/// lambda + 2 delta for idQM, lambda + delta for oQM.
ParamBinding christoffel_shift(const FamilyDescriptor& f, const ParamBinding& p);

/// The polynomial kappa^{-1} varphi^2 varphi(x - i gamma/2) varphi(x + i gamma/2) V V*
/// (idQM) or (4/c_F^2) c_2 (oQM), with no degree checks.
LaurentPoly assemble_phi(const FamilyDescriptor& f, const ParamBinding& p);

/// Throws DegreeMismatch when the assembled polynomial disagrees with the
/// printed degree, leading coefficient or zeros.
PhiFactorization compute_phi(const FamilyDescriptor& f, const ParamBinding& p);
bool trivial_phi_check(const FamilyDescriptor& f, const ParamBinding& p);

/// det(P_{n+l_k}(x_j)/P_n(x_j)); rows of a multiple zero carry eta-derivatives
/// normalized by the same derivative of P_n. Throws ZeroDenominator.
ExactScalar D_matrix_det(const FamilyDescriptor& f, const ParamBinding& p, int n,
                         const std::vector<int>& ells);

ChristoffelCoefficients alpha_from_determinants(const FamilyDescriptor& f, const ParamBinding& p, int n);
ChristoffelCoefficients alpha_closed_form(const FamilyDescriptor& f, const ParamBinding& p, int n);

/// Phi P_n(lambda + 2 delta) - beta sum_k alpha_k P_{n+k}(lambda) with given coefficients.
LaurentPoly expansion_residual(const FamilyDescriptor& f, const ParamBinding& p,
                               const ChristoffelCoefficients& c);
/// Both coefficient paths.
VerificationOutcome verify_expansion(const FamilyDescriptor& f, const ParamBinding& p, int n);

/// Determinant path against the printed data: alpha, beta, beta^F, D and the
/// printed P_n values at the zeros.
VerificationOutcome compare_coefficients(const FamilyDescriptor& f, const ParamBinding& p, int n);
VerificationOutcome verify_phi(const FamilyDescriptor& f, const ParamBinding& p);

/// Askey-Wilson with a single a_j shifted; j is 1-based.
VerificationOutcome single_shift_aw(const ParamBinding& p, int j, int n);
VerificationOutcome composition_check_aw(const ParamBinding& p, int n);

/// beta_n alpha_{n,0} != 0; throws NonPhysicalBinding outside the physical range.
bool diagonal_nonvanishing(const FamilyDescriptor& f, const ParamBinding& p, int n);

}  // namespace askey
