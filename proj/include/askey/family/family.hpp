#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "askey/exact/laurent.hpp"
#include "askey/exact/rational_fn.hpp"
#include "askey/exact/scalar.hpp"

namespace askey {

enum class FamilyId { cH, MP, W, cdH, AW, cdqH, ASC, cbqHe, cqHe, cqJ, cqL, cqH, qMP, He, L, J, B, pJ };

/// Sinusoidal-coordinate class; Oqm families work directly in eta.
enum class CoordClass { I, II, III, IV, Oqm };

enum class Mechanics { IdQM, OQM };

/// Exact parameter values for one family. `values` holds the named slots,
/// `q_sqrt` is s with q = s^2, `phi_unit` is w = e^{i phi}.
struct ParamBinding {
  FamilyId family = FamilyId::He;
  std::map<std::string, ExactScalar> values;
  std::optional<ExactScalar> q_sqrt;
  std::optional<ExactScalar> phi_unit;

  const ExactScalar& at(const std::string& slot) const;
  ExactScalar s() const;
  ExactScalar q() const { return s() * s(); }
  ExactScalar w() const;
  /// Canonical one-line rendering, stable across runs.
  std::string digest() const;
};

struct ZeroPoint {
  ExactScalar rep;  // x_j (class i/ii), z_j = e^{i x_j} (iii/iv), or eta_j (oQM)
  ExactScalar eta;
  int multiplicity = 1;
};

struct SpectralData {
  ExactScalar E;
  ExactScalar f;
  ExactScalar b;
};

/// Coefficient polynomials of the oQM operators, in eta.
struct OqmData {
  LaurentPoly c1;
  LaurentPoly c2;
  ExactScalar c_F;
};

/// The printed Christoffel data for one n: alpha_{n,0..m}, beta_n, beta^F_n
/// and, where printed, D_n^{(0,...,m-1)} (D' for a double zero).
struct ClosedForm {
  std::vector<ExactScalar> alpha;
  ExactScalar beta;
  ExactScalar beta_F;
  std::optional<ExactScalar> D;
};

struct FamilyDescriptor {
  FamilyId id;
  std::string tag;
  std::string name;
  CoordClass cls;
  Mechanics mechanics;
  int m = 0;  // degree of Phi in eta; 0 for the trivial cases
  std::vector<std::string> slots;
  bool needs_q = false;
  bool needs_phi = false;

  std::function<void(const ParamBinding&)> validate;
  std::function<bool(const ParamBinding&)> physical;
  /// lambda + k delta
  std::function<ParamBinding(const ParamBinding&, int)> shift;
  std::function<LaurentPoly(const ParamBinding&, int)> build;
  std::function<SpectralData(const ParamBinding&, int)> spectral;
  std::function<ExactScalar(const ParamBinding&, int)> leading;
  std::function<RationalFn(const ParamBinding&)> potential;
  std::function<OqmData(const ParamBinding&)> oqm;
  std::function<ExactScalar(const ParamBinding&)> c_phi;
  std::function<std::vector<ZeroPoint>(const ParamBinding&)> zeros;
  /// Printed value of P_n at zero j (0-based); arguments are (p, j, n).
  std::function<ExactScalar(const ParamBinding&, int, int)> value_at_zero;
  /// Printed value of P'_n at a multiple zero; only Bessel sets this.
  std::function<ExactScalar(const ParamBinding&, int)> derivative_at_zero;
  std::function<ClosedForm(const ParamBinding&, int)> closed_form;
  std::function<std::vector<ParamBinding>()> default_bindings;

  bool is_idqm() const { return mechanics == Mechanics::IdQM; }
  bool trivial_phi() const { return m == 0; }
  /// kappa = q^{-1} for classes iii/iv, 1 otherwise.
  bool kappa_is_q_inverse() const { return cls == CoordClass::III || cls == CoordClass::IV; }
};

const std::vector<FamilyDescriptor>& catalog();
const FamilyDescriptor& family(FamilyId id);
/// Accepts "cqJ" and the spelling with the mathematical italic q.
const FamilyDescriptor& family(std::string_view tag);
std::string family_tag(FamilyId id);

/// Validated binding from slot strings; throws InvalidBinding.
ParamBinding make_binding(FamilyId id, const std::map<std::string, std::string>& slots);

/// w = ((m^2 - n^2) + 2mn i)/(m^2 + n^2).
ExactScalar pythagorean_unit(long m, long n);

/// Checks that {conj(v)} = {v} as multisets.
bool conjugation_closed(const std::vector<ExactScalar>& v);

/// Coefficient-level checks for one (family, binding, n).
bool leading_coefficient_check(const FamilyDescriptor& f, const ParamBinding& p, int n);
ExactScalar eval_at_special_point(const FamilyDescriptor& f, const ParamBinding& p, int n, int j);

}  // namespace askey
