#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "askey/errors.hpp"
#include "askey/exact/laurent.hpp"
#include "askey/family/family.hpp"

namespace askey::detail {

using S = ExactScalar;

inline S half() { return S::frac(1, 2); }
inline S I() { return S::i(); }

/// sum_{k=0}^{n} c_k prod_{j<k} factor(j), with c_0 = 1 and
/// c_{k+1} = c_k * ratio(k). The loop stops early once a ratio vanishes.
LaurentPoly hyper_sum(Var var, int n, const std::function<S(int)>& ratio,
                      const std::function<LaurentPoly(int)>& factor);

/// (1 - c u^e) in variable var.
LaurentPoly one_minus(Var var, const S& c, int e);

/// (a + k + i x) as a polynomial in x.
LaurentPoly linear_ix(const S& a, int sign = 1);

/// Product over pairs j<k of g(v_j, v_k).
S pair_product(const std::vector<S>& v, const std::function<S(const S&, const S&)>& g);

/// Elementary symmetric polynomials e_1..e_r of v.
std::vector<S> elementary(const std::vector<S>& v);

/// (a; base)_n
inline S qp(const S& a, const S& base, int n) { return qpochhammer(a, base, n); }
/// (a)_n
inline S rp(const S& a, int n) { return rising_factorial(a, n); }

/// sin(phi), cos(phi), cos(2 phi) from w = e^{i phi}.
inline S sin_phi(const S& w) { return (w - w.inverse()) / (S(2) * I()); }
inline S cos_phi(const S& w) { return (w + w.inverse()) / S(2); }
inline S cos_2phi(const S& w) { return (w * w + (w * w).inverse()) / S(2); }

void require_slots(const ParamBinding& p, std::initializer_list<const char*> names);
void require_real(const ParamBinding& p, std::initializer_list<const char*> names);
void require_q(const ParamBinding& p);
void require_phi(const ParamBinding& p);
void require_conj_closed(const ParamBinding& p, std::initializer_list<const char*> names);

/// Applies fn to every listed slot.
ParamBinding map_slots(const ParamBinding& p, std::initializer_list<const char*> names,
                       const std::function<S(const S&)>& fn);

/// Binding from literal strings; used for the bundled defaults.
ParamBinding lit(FamilyId id, std::initializer_list<std::pair<const char*, const char*>> kv,
                 const char* s = nullptr, const char* w = nullptr);

bool real_positive(const S& v);
bool abs_less_than_one(const S& v);

FamilyDescriptor make_cH();
FamilyDescriptor make_MP();
FamilyDescriptor make_W();
FamilyDescriptor make_cdH();
FamilyDescriptor make_AW();
FamilyDescriptor make_cdqH();
FamilyDescriptor make_ASC();
FamilyDescriptor make_cbqHe();
FamilyDescriptor make_cqHe();
FamilyDescriptor make_cqJ();
FamilyDescriptor make_cqL();
FamilyDescriptor make_cqH();
FamilyDescriptor make_qMP();
FamilyDescriptor make_He();
FamilyDescriptor make_L();
FamilyDescriptor make_J();
FamilyDescriptor make_B();
FamilyDescriptor make_pJ();

}  // namespace askey::detail
