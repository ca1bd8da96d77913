#include "common.hpp"

namespace askey::detail {

namespace {

struct CHParams {
  S a1, a2, a3, a4;
  std::vector<S> b;  // b[0] = 1, b[1..4]
};

CHParams ch_params(const ParamBinding& p) {
  CHParams c;
  c.a1 = p.at("a1");
  c.a2 = p.at("a2");
  c.a3 = c.a1.conj();
  c.a4 = c.a2.conj();
  c.b = elementary({c.a1, c.a2, c.a3, c.a4});
  return c;
}

}  // namespace

FamilyDescriptor make_cH() {
  FamilyDescriptor f;
  f.id = FamilyId::cH;
  f.tag = "cH";
  f.name = "continuous Hahn";
  f.cls = CoordClass::I;
  f.mechanics = Mechanics::IdQM;
  f.m = 4;
  f.slots = {"a1", "a2"};

  f.validate = [](const ParamBinding& p) { require_slots(p, {"a1", "a2"}); };
  f.physical = [](const ParamBinding& p) {
    return sgn(p.at("a1").re()) > 0 && sgn(p.at("a2").re()) > 0;
  };
  f.shift = [](const ParamBinding& p, int k) {
    return map_slots(p, {"a1", "a2"}, [k](const S& a) { return a + S::frac(k, 2); });
  };
  f.build = [](const ParamBinding& p, int n) {
    const CHParams c = ch_params(p);
    const S b1 = c.b[1];
    const LaurentPoly sum = hyper_sum(
        Var::X, n,
        [&](int k) {
          return S(k - n) * (S(n + k - 1) + b1) / ((c.a1 + c.a3 + k) * (c.a1 + c.a4 + k) * S(k + 1));
        },
        [&](int k) { return linear_ix(c.a1 + k); });
    return sum * (I().pow(n) * rp(c.a1 + c.a3, n) * rp(c.a1 + c.a4, n) / factorial(n));
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const S b1 = ch_params(p).b[1];
    return SpectralData{S(n) * (S(n - 1) + b1), S(n - 1) + b1, S(n + 1)};
  };
  f.leading = [](const ParamBinding& p, int n) {
    return rp(S(n - 1) + ch_params(p).b[1], n) / factorial(n);
  };
  f.potential = [](const ParamBinding& p) {
    return RationalFn(linear_ix(p.at("a1")) * linear_ix(p.at("a2")));
  };
  f.c_phi = [](const ParamBinding&) { return S(1); };
  f.zeros = [](const ParamBinding& p) {
    const CHParams c = ch_params(p);
    std::vector<ZeroPoint> z;
    for (const S& a : {c.a1, c.a2}) z.push_back({I() * a, I() * a, 1});
    for (const S& a : {c.a3, c.a4}) z.push_back({-I() * a, -I() * a, 1});
    return z;
  };
  f.value_at_zero = [](const ParamBinding& p, int j, int n) {
    const CHParams c = ch_params(p);
    const S a[4] = {c.a1, c.a2, c.a3, c.a4};
    if (j < 2) return I().pow(n) / factorial(n) * rp(a[j] + c.a3, n) * rp(a[j] + c.a4, n);
    return (-I()).pow(n) / factorial(n) * rp(a[j] + c.a1, n) * rp(a[j] + c.a2, n);
  };
  f.closed_form = [](const ParamBinding& p, int n) {
    const CHParams c = ch_params(p);
    const S &a1 = c.a1, &a2 = c.a2, &a3 = c.a3, &a4 = c.a4;
    const S b1 = c.b[1], b2 = c.b[2], b3 = c.b[3], b4 = c.b[4];
    auto cross = [&](int shift) {
      S out(1);
      for (const S& aj : {a1, a2}) {
        for (const S& ak : {a3, a4}) out *= aj + ak + shift;
      }
      return out;
    };
    auto cross_poch = [&](int shift, int len) {
      S out(1);
      for (const S& aj : {a1, a2}) {
        for (const S& ak : {a3, a4}) out *= rp(aj + ak + shift, len);
      }
      return out;
    };
    const S N(n);
    const S mix = (a1 - a2 + a3 - a4) * (a1 - a2 - a3 + a4);
    ClosedForm cf;
    cf.alpha.resize(5);
    cf.alpha[4] = 1;
    cf.alpha[3] = -I() * mix * (b1 + 2 * n + 5) / (S(n + 4) * (b1 + 2 * n + 2));
    const S a12sq = a1 * a1 + a2 * a2;
    const S a34sq = a3 * a3 + a4 * a4;
    S inner = S(2 * n + 3) * rp(b1 + n, 3) - S((n + 1) * (2 * n + 1)) * rp(b1 + n + 1, 2) +
              rp(S(n + 1), 2) * S(2 * n + 3) * (b1 + n + 2) - rp(S(n + 1), 3) - S(6) * b2 * b2 +
              b3 * (S(3) * b1 + 4 * n + 6) + S(4) * b4 +
              S(2) * (rp(b1 + n, 2) - S(4 * (n + 1)) * (b1 + n + 1) + S(n * (n + 1))) * b2 -
              (a1.pow(3) + a2.pow(3)) * (a3 + a4) - (a1 + a2) * (a3.pow(3) + a4.pow(3)) -
              a12sq * a3 * a4 - a1 * a2 * a34sq + S(4) * a12sq * a34sq +
              S(2 * n + 3) * (a12sq * (a3 + a4) + (a1 + a2) * a34sq) +
              S(2) * rp(S(n + 1), 2) * (a1 + a2) * (a3 + a4);
    cf.alpha[2] = (b1 + 2 * n + 3) * (b1 + 2 * n + 6) / (rp(N + 3, 2) * rp(b1 + 2 * n + 1, 2)) * inner;
    cf.alpha[1] = I() * mix * rp(b1 + 2 * n + 5, 2) /
                  (rp(N + 2, 3) * (b1 + 2 * n) * (b1 + 2 * n + 2)) * cross(n + 1);
    cf.alpha[0] = cross_poch(n, 2) * rp(b1 + 2 * n + 4, 3) / (rp(N + 1, 4) * rp(b1 + 2 * n, 3));
    cf.beta = rp(N + 1, 4) / rp(b1 + 2 * n + 3, 4);
    cf.beta_F = rp(N + 1, 4) * rp(b1 + n + 1, 2) / rp(b1 + 2 * n + 3, 4);
    cf.D = (a1 - a2) * (a3 - a4) * cross(n) * rp(b1 + 2 * n, 3) * rp(b1 + 2 * n + 2, 3) /
           (rp(N + 1, 3) * rp(N + 1, 2) * (N + 1));
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::cH, {{"a1", "1/2+1/3i"}, {"a2", "2/3-1/5i"}}),
        lit(FamilyId::cH, {{"a1", "3/4+1/2i"}, {"a2", "1/3+2/7i"}}),
        lit(FamilyId::cH, {{"a1", "5/4-1/3i"}, {"a2", "2/5+1/6i"}}),
    };
  };
  return f;
}

FamilyDescriptor make_MP() {
  FamilyDescriptor f;
  f.id = FamilyId::MP;
  f.tag = "MP";
  f.name = "Meixner-Pollaczek";
  f.cls = CoordClass::I;
  f.mechanics = Mechanics::IdQM;
  f.m = 2;
  f.slots = {"a"};
  f.needs_phi = true;

  f.validate = [](const ParamBinding& p) {
    require_slots(p, {"a"});
    require_real(p, {"a"});
    require_phi(p);
  };
  f.physical = [](const ParamBinding& p) { return real_positive(p.at("a")) && sgn(p.w().im()) > 0; };
  f.shift = [](const ParamBinding& p, int k) {
    return map_slots(p, {"a"}, [k](const S& a) { return a + S::frac(k, 2); });
  };
  f.build = [](const ParamBinding& p, int n) {
    const S a = p.at("a");
    const S w = p.w();
    const S arg = S(1) - w.conj() * w.conj();
    const LaurentPoly sum = hyper_sum(
        Var::X, n, [&](int k) { return S(k - n) * arg / ((S(2) * a + k) * S(k + 1)); },
        [&](int k) { return linear_ix(a + k); });
    return sum * (rp(S(2) * a, n) * w.pow(n) / factorial(n));
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const S sn = sin_phi(p.w());
    return SpectralData{S(2 * n) * sn, S(2) * sn, S(n + 1)};
  };
  f.leading = [](const ParamBinding& p, int n) {
    return (S(2) * sin_phi(p.w())).pow(n) / factorial(n);
  };
  f.potential = [](const ParamBinding& p) {
    return RationalFn(linear_ix(p.at("a")) * (I() * p.w().conj()));
  };
  f.c_phi = [](const ParamBinding&) { return S(1); };
  f.zeros = [](const ParamBinding& p) {
    const S a = p.at("a");
    return std::vector<ZeroPoint>{{I() * a, I() * a, 1}, {-I() * a, -I() * a, 1}};
  };
  f.value_at_zero = [](const ParamBinding& p, int j, int n) {
    const S w = p.w();
    return rp(S(2) * p.at("a"), n) * (j == 0 ? w : w.conj()).pow(n) / factorial(n);
  };
  f.closed_form = [](const ParamBinding& p, int n) {
    const S a = p.at("a");
    const S w = p.w();
    const S N(n);
    ClosedForm cf;
    cf.alpha = {rp(S(2) * a + n, 2) / rp(N + 1, 2), S(-2) * cos_phi(w) * (S(2) * a + n + 1) / (N + 2),
                S(1)};
    cf.beta = rp(N + 1, 2) / (S(2) * sin_phi(w)).pow(2);
    cf.beta_F = rp(N + 1, 2);
    cf.D = S(-2) * I() * sin_phi(w) * (S(2) * a + n) / (N + 1);
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::MP, {{"a", "3/4"}}, nullptr, "3/5+4/5i"),
        lit(FamilyId::MP, {{"a", "5/3"}}, nullptr, "-3/5+4/5i"),
        lit(FamilyId::MP, {{"a", "2/7"}}, nullptr, "4/5+3/5i"),
    };
  };
  return f;
}

}  // namespace askey::detail
