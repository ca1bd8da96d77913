#pragma once

#include "common.hpp"

namespace askey::detail {

/// (1 - a q^k w2 z)(1 - a q^k / z)
LaurentPoly askey_factor(const S& a, const S& qk, const S& w2);

/// Terminating r+1 phi r (q^{-n}, nums..., a w2 z, a/z; dens... | q, q) in z.
/// A zero entry in dens stands for the bare 0 lower parameter.
LaurentPoly qsum(const S& q, int n, const std::vector<S>& nums, const std::vector<S>& dens, const S& a,
                 const S& w2 = S(1));

/// prod_j (1 - c_j z) / ((1 - w2 z^2)(1 - q w2 z^2))
RationalFn q_potential(const std::vector<S>& cs, const S& q, const S& w2 = S(1));

/// Zero with e^{i x_j} = z_j; eta = (w z_j + (w z_j)^{-1})/2.
ZeroPoint unit_circle_zero(const S& zj, const S& w = S(1));

/// prod_k (1 - c q^k) for k = 0..len-1 with base b.
inline S qpoch(const S& c, const S& base, int len) { return qpochhammer(c, base, len); }

std::vector<S> numbered_slots(const ParamBinding& p, int count);

bool all_inside_unit_disk(const std::vector<S>& v);

/// Parameter shift a_j -> a_j s^k on the listed slots.
ParamBinding scale_slots(const ParamBinding& p, const std::vector<std::string>& slots, int k);

}  // namespace askey::detail
