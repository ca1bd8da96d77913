#include "common.hpp"

#include <algorithm>

namespace askey::detail {

LaurentPoly hyper_sum(Var var, int n, const std::function<S(int)>& ratio,
                      const std::function<LaurentPoly(int)>& factor) {
  LaurentPoly acc = LaurentPoly::constant(var, 1);
  LaurentPoly prod = LaurentPoly::constant(var, 1);
  S c(1);
  for (int k = 0; k < n; ++k) {
    c *= ratio(k);
    if (c.is_zero()) break;
    prod = prod * factor(k);
    acc += prod * c;
  }
  return acc;
}

LaurentPoly one_minus(Var var, const S& c, int e) {
  return LaurentPoly::constant(var, 1) - LaurentPoly::monomial(var, e, c);
}

LaurentPoly linear_ix(const S& a, int sign) {
  return LaurentPoly::from_coeffs(Var::X, 0, {a, S(sign) * I()});
}

S pair_product(const std::vector<S>& v, const std::function<S(const S&, const S&)>& g) {
  S out(1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t k = j + 1; k < v.size(); ++k) out *= g(v[j], v[k]);
  }
  return out;
}

std::vector<S> elementary(const std::vector<S>& v) {
  std::vector<S> e(v.size() + 1);
  e[0] = S(1);
  for (const auto& a : v) {
    for (std::size_t k = v.size(); k >= 1; --k) e[k] += e[k - 1] * a;
  }
  return e;
}

void require_slots(const ParamBinding& p, std::initializer_list<const char*> names) {
  for (const char* n : names) (void)p.at(n);
}

void require_real(const ParamBinding& p, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (!p.at(n).is_real()) {
      throw InvalidBinding(family_tag(p.family) + ": parameter " + n + " must be real");
    }
  }
}

void require_q(const ParamBinding& p) {
  const S s = p.s();
  if (!s.is_real() || sgn(s.re()) <= 0 || s.re() >= 1) {
    throw InvalidBinding(family_tag(p.family) + ": need 0 < s < 1 with q = s^2");
  }
}

void require_phi(const ParamBinding& p) {
  const S w = p.w();
  if (w.norm() != 1) throw InvalidBinding(family_tag(p.family) + ": |w| must be 1");
  if (w.is_real()) throw InvalidBinding(family_tag(p.family) + ": sin(phi) must be nonzero");
}

void require_conj_closed(const ParamBinding& p, std::initializer_list<const char*> names) {
  std::vector<S> v;
  for (const char* n : names) v.push_back(p.at(n));
  if (!conjugation_closed(v)) {
    throw InvalidBinding(family_tag(p.family) + ": parameters are not closed under conjugation");
  }
}

ParamBinding map_slots(const ParamBinding& p, std::initializer_list<const char*> names,
                       const std::function<S(const S&)>& fn) {
  ParamBinding out = p;
  for (const char* n : names) out.values[n] = fn(p.at(n));
  return out;
}

ParamBinding lit(FamilyId id, std::initializer_list<std::pair<const char*, const char*>> kv,
                 const char* s, const char* w) {
  ParamBinding p;
  p.family = id;
  for (const auto& [k, v] : kv) p.values[k] = S::parse(v);
  if (s != nullptr) p.q_sqrt = S::parse(s);
  if (w != nullptr) p.phi_unit = S::parse(w);
  return p;
}

bool real_positive(const S& v) { return v.is_real() && sgn(v.re()) > 0; }

bool abs_less_than_one(const S& v) { return v.norm() < 1; }

}  // namespace askey::detail
