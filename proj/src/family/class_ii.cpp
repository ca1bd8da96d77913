#include "common.hpp"

namespace askey::detail {

namespace {

std::vector<S> slot_values(const ParamBinding& p, int count) {
  std::vector<S> a;
  for (int j = 1; j <= count; ++j) a.push_back(p.at("a" + std::to_string(j)));
  return a;
}

/// (c + i x)(c - i x) = c^2 + x^2
LaurentPoly square_pair(const S& c) { return LaurentPoly::from_coeffs(Var::X, 0, {c * c, 0, 1}); }

RationalFn wilson_type_potential(const std::vector<S>& a) {
  LaurentPoly num = LaurentPoly::constant(Var::X, 1);
  for (const S& aj : a) num = num * linear_ix(aj);
  // 2ix(2ix + 1)
  const LaurentPoly den = LaurentPoly::from_coeffs(Var::X, 1, {S(2) * I(), -4});
  return {num, den};
}

std::vector<ZeroPoint> imaginary_zeros(const std::vector<S>& a) {
  std::vector<ZeroPoint> z;
  for (const S& aj : a) z.push_back({I() * aj, -aj * aj, 1});
  return z;
}

S value_at(const std::vector<S>& a, int j, int n) {
  S out(1);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (static_cast<int>(k) != j) out *= rp(a[j] + a[k], n);
  }
  return out;
}

S pair_sums(const std::vector<S>& a, int shift, int len) {
  return pair_product(a, [&](const S& x, const S& y) { return rp(x + y + shift, len); });
}

FamilyDescriptor wilson_skeleton(FamilyId id, std::string tag, std::string name, int count) {
  FamilyDescriptor f;
  f.id = id;
  f.tag = std::move(tag);
  f.name = std::move(name);
  f.cls = CoordClass::II;
  f.mechanics = Mechanics::IdQM;
  f.m = count;
  for (int j = 1; j <= count; ++j) f.slots.push_back("a" + std::to_string(j));
  const std::vector<std::string> slots = f.slots;

  f.validate = [slots](const ParamBinding& p) {
    std::vector<S> v;
    for (const auto& s : slots) v.push_back(p.at(s));
    if (!conjugation_closed(v)) {
      throw InvalidBinding(family_tag(p.family) + ": parameters are not closed under conjugation");
    }
  };
  f.physical = [count](const ParamBinding& p) {
    for (const S& a : slot_values(p, count)) {
      if (sgn(a.re()) <= 0) return false;
    }
    return true;
  };
  f.shift = [slots](const ParamBinding& p, int k) {
    ParamBinding out = p;
    for (const auto& s : slots) out.values[s] = p.at(s) + S::frac(k, 2);
    return out;
  };
  f.potential = [count](const ParamBinding& p) { return wilson_type_potential(slot_values(p, count)); };
  f.c_phi = [](const ParamBinding&) { return S(1); };
  f.zeros = [count](const ParamBinding& p) { return imaginary_zeros(slot_values(p, count)); };
  f.value_at_zero = [count](const ParamBinding& p, int j, int n) {
    return value_at(slot_values(p, count), j, n);
  };
  return f;
}

}  // namespace

FamilyDescriptor make_W() {
  FamilyDescriptor f = wilson_skeleton(FamilyId::W, "W", "Wilson", 4);
  f.build = [](const ParamBinding& p, int n) {
    const auto a = slot_values(p, 4);
    const S b1 = a[0] + a[1] + a[2] + a[3];
    const LaurentPoly sum = hyper_sum(
        Var::X, n,
        [&](int k) {
          return S(k - n) * (S(n + k - 1) + b1) /
                 ((a[0] + a[1] + k) * (a[0] + a[2] + k) * (a[0] + a[3] + k) * S(k + 1));
        },
        [&](int k) { return square_pair(a[0] + k); });
    return sum * (rp(a[0] + a[1], n) * rp(a[0] + a[2], n) * rp(a[0] + a[3], n));
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const auto a = slot_values(p, 4);
    const S e = S(n) * (S(n - 1) + a[0] + a[1] + a[2] + a[3]);
    return SpectralData{e, -e, S(-1)};
  };
  f.leading = [](const ParamBinding& p, int n) {
    const auto a = slot_values(p, 4);
    return S(n % 2 == 0 ? 1 : -1) * rp(S(n - 1) + a[0] + a[1] + a[2] + a[3], n);
  };
  f.closed_form = [](const ParamBinding& p, int n) {
    const auto a = slot_values(p, 4);
    const auto e = elementary(a);
    const S b1 = e[1], b2 = e[2], b3 = e[3], b4 = e[4];
    const S N(n);
    ClosedForm cf;
    cf.alpha.resize(5);
    cf.alpha[4] = 1;
    cf.alpha[3] = -(b1 + 2 * n + 5) / (b1 + 2 * n + 2) *
                  (rp(b1 + n + 1, 3) + S(3 * n * n + 12 * n + 11) * b1 + S(3) * rp(N + 1, 3) -
                   S(2) * b1 * b2 + S(4) * b3);
    const S inner =
        S(3 * n * n + 9 * n + 7) * rp(b1 + n, 4) + (b3 + S(2 * n + 3) * (S(2) * b2 - 1)) * rp(b1 + n, 3) +
        (S(2) * b4 - S(5 * n + 6) * b3 + b2 * (b2 - S(2 * (n + 1) * (2 * n + 1))) +
         S(3 * (n + 1) * (n * n * n + 5 * n * n + 10 * n + 7))) *
            rp(b1 + n, 2) +
        (S(2 * (2 * n + 5)) * b4 + (S(5 * n * (n + 1)) - S(6) * b2) * b3 -
         S(2 * (n + 1)) * b2 * (S(2) * b2 - S(2 * n * n + 3 * n + 4)) +
         S((n + 1) * (6 * n * n * n + 28 * n * n + 53 * n + 36))) *
            (b1 + n) +
        S(2 * (n + 2) * (n + 4)) * b4 + b3 * (S(6) * b3 + S(6 * n) * b2 - S(n * (n + 1) * (n - 4))) +
        S(n + 1) * b2 * (S(n - 4) * b2 + S(2 * (3 * n * n + 5 * n + 4))) +
        S((n + 1) * (7 * n * n * n + 32 * n * n + 57 * n + 36));
    cf.alpha[2] = (b1 + 2 * n + 3) * (b1 + 2 * n + 6) / rp(b1 + 2 * n + 1, 2) * inner;
    cf.alpha[1] = -pair_sums(a, n + 1, 1) * rp(b1 + 2 * n + 5, 2) / ((b1 + 2 * n) * (b1 + 2 * n + 2)) *
                  (S(3 * (n + 1)) * rp(b1 + n, 2) + S(3 * n + 1) * b1 + S(n * (n + 1) * (n + 5)) +
                   S(2) * b1 * b2 - S(4) * b3);
    cf.alpha[0] = pair_sums(a, n, 2) * rp(b1 + 2 * n + 4, 3) / rp(b1 + 2 * n, 3);
    cf.beta = S(1) / rp(b1 + 2 * n + 3, 4);
    cf.beta_F = rp(N + 1, 2) * rp(b1 + n + 1, 2) / rp(b1 + 2 * n + 3, 4);
    cf.D = pair_product(a, [&](const S& x, const S& y) { return (x - y) * (x + y + n); }) *
           rp(b1 + 2 * n, 3) * rp(b1 + 2 * n + 2, 3);
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::W, {{"a1", "1/2"}, {"a2", "1/3"}, {"a3", "3/4"}, {"a4", "2/5"}}),
        lit(FamilyId::W, {{"a1", "1/2+1/3i"}, {"a2", "1/2-1/3i"}, {"a3", "3/4"}, {"a4", "2/5"}}),
        lit(FamilyId::W, {{"a1", "5/4"}, {"a2", "2/7"}, {"a3", "1/3+1/2i"}, {"a4", "1/3-1/2i"}}),
    };
  };
  return f;
}

FamilyDescriptor make_cdH() {
  FamilyDescriptor f = wilson_skeleton(FamilyId::cdH, "cdH", "continuous dual Hahn", 3);
  f.build = [](const ParamBinding& p, int n) {
    const auto a = slot_values(p, 3);
    const LaurentPoly sum = hyper_sum(
        Var::X, n,
        [&](int k) { return S(k - n) / ((a[0] + a[1] + k) * (a[0] + a[2] + k) * S(k + 1)); },
        [&](int k) { return square_pair(a[0] + k); });
    return sum * (rp(a[0] + a[1], n) * rp(a[0] + a[2], n));
  };
  f.spectral = [](const ParamBinding&, int n) { return SpectralData{S(n), S(-n), S(-1)}; };
  f.leading = [](const ParamBinding&, int n) { return S(n % 2 == 0 ? 1 : -1); };
  f.closed_form = [](const ParamBinding& p, int n) {
    const auto a = slot_values(p, 3);
    const auto e = elementary(a);
    const S b1 = e[1], b2 = e[2];
    const S N(n);
    ClosedForm cf;
    cf.alpha = {-pair_sums(a, n, 2), pair_sums(a, n + 1, 1) * (S(2) * b1 + 3 * (n + 1)),
                -(b2 + rp(b1 + n, 2) + S(2 * n + 5) * (b1 + n + 1) + n + 2), S(1)};
    cf.beta = -1;
    cf.beta_F = -rp(N + 1, 2);
    cf.D = -pair_product(a, [&](const S& x, const S& y) { return (x - y) * (x + y + n); });
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::cdH, {{"a1", "1/2"}, {"a2", "1/3"}, {"a3", "3/4"}}),
        lit(FamilyId::cdH, {{"a1", "1/2+1/3i"}, {"a2", "1/2-1/3i"}, {"a3", "2/5"}}),
        lit(FamilyId::cdH, {{"a1", "5/4"}, {"a2", "2/7"}, {"a3", "3/5"}}),
    };
  };
  return f;
}

}  // namespace askey::detail
