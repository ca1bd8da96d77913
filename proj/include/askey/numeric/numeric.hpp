#pragma once

#include <complex>
#include <vector>

#include "askey/family/family.hpp"
#include "askey/outcome.hpp"

namespace askey::numeric {

enum class Precision { Double, Extended };

struct NumericConfig {
  Precision precision = Precision::Double;
  int qpoch_truncation = 200;
  /// Initial number of Gauss-Legendre panels; doubled until converged.
  int quad_points = 32;
  double tol_rel = 1e-8;
};

/// Throws ConfigError.
void validate(const NumericConfig& cfg);

/// MP, AW, J and L carry weight models.
bool numeric_supported(FamilyId id);
/// Physical bindings used by the numeric suite.
std::vector<ParamBinding> numeric_bindings(FamilyId id);

/// log Gamma(z) by the Lanczos approximation (g = 7, 9 terms).
std::complex<double> lgamma_complex(std::complex<double> z);
std::complex<long double> lgamma_complex(std::complex<long double> z);

/// prod_{k < terms} (1 - a q^k)
std::complex<double> qpoch_inf(std::complex<double> a, double q, int terms);

/// phi_0(x)^2 and h_n; throw NonPhysicalBinding.
double ground_weight(const FamilyDescriptor& f, const ParamBinding& p, double x, const NumericConfig& cfg);
double norm_h(const FamilyDescriptor& f, const ParamBinding& p, int n, const NumericConfig& cfg);

/// Interior sample points of (x_min, x_max).
std::vector<double> default_samples(const FamilyDescriptor& f, const ParamBinding& p, int count = 7);

/// max over samples of |phi_0(lambda')^2 / phi_0(lambda)^2 - Phi| / |Phi|.
double weight_ratio_residual(const FamilyDescriptor& f, const ParamBinding& p, const std::vector<double>& xs,
                             const NumericConfig& cfg);
VerificationOutcome weight_ratio_check(const FamilyDescriptor& f, const ParamBinding& p,
                                       const std::vector<double>& xs, const NumericConfig& cfg);

/// int phi_0^2 P_n P_m dx; with christoffel set, the weight is Phi phi_0(lambda)^2
/// and the polynomials are those at lambda + 2 delta (lambda + delta for oQM).
/// Throws QuadratureNonConvergence.
double inner_product(const FamilyDescriptor& f, const ParamBinding& p, int n, int m, const NumericConfig& cfg,
                     bool christoffel = false);

VerificationOutcome orthogonality_check(const FamilyDescriptor& f, const ParamBinding& p, int n, int m,
                                        const NumericConfig& cfg);
VerificationOutcome christoffel_orthogonality_check(const FamilyDescriptor& f, const ParamBinding& p, int n,
                                                    int m, const NumericConfig& cfg);

}  // namespace askey::numeric
