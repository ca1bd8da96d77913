#include "qcommon.hpp"

namespace askey::detail {

LaurentPoly askey_factor(const S& a, const S& qk, const S& w2) {
  const S c = a * qk;
  return LaurentPoly::from_coeffs(Var::Z, -1, {-c, S(1) + c * c * w2, -c * w2});
}

LaurentPoly qsum(const S& q, int n, const std::vector<S>& nums, const std::vector<S>& dens, const S& a,
                 const S& w2) {
  return hyper_sum(
      Var::Z, n,
      [&](int k) {
        const S qk = q.pow(k);
        S r = (S(1) - q.pow(k - n)) * q / (S(1) - qk * q);
        for (const S& c : nums) r *= S(1) - c * qk;
        for (const S& b : dens) r /= S(1) - b * qk;
        return r;
      },
      [&](int k) { return askey_factor(a, q.pow(k), w2); });
}

RationalFn q_potential(const std::vector<S>& cs, const S& q, const S& w2) {
  LaurentPoly num = LaurentPoly::constant(Var::Z, 1);
  for (const S& c : cs) num = num * one_minus(Var::Z, c, 1);
  const LaurentPoly den = one_minus(Var::Z, w2, 2) * one_minus(Var::Z, q * w2, 2);
  return {num, den};
}

ZeroPoint unit_circle_zero(const S& zj, const S& w) {
  const S u = w * zj;
  return {zj, (u + u.inverse()) / S(2), 1};
}

std::vector<S> numbered_slots(const ParamBinding& p, int count) {
  std::vector<S> a;
  for (int j = 1; j <= count; ++j) a.push_back(p.at("a" + std::to_string(j)));
  return a;
}

bool all_inside_unit_disk(const std::vector<S>& v) {
  for (const S& a : v) {
    if (!abs_less_than_one(a)) return false;
  }
  return true;
}

ParamBinding scale_slots(const ParamBinding& p, const std::vector<std::string>& slots, int k) {
  ParamBinding out = p;
  const S f = p.s().pow(k);
  for (const auto& s : slots) out.values[s] = p.at(s) * f;
  return out;
}

}  // namespace askey::detail
