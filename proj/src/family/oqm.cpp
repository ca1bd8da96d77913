#include "common.hpp"

namespace askey::detail {

namespace {

LaurentPoly eta_lin(const S& c0, const S& c1) { return LaurentPoly::from_coeffs(Var::X, 0, {c0, c1}); }

FamilyDescriptor oqm_skeleton(FamilyId id, std::string tag, std::string name, int m,
                              std::vector<std::string> slots) {
  FamilyDescriptor f;
  f.id = id;
  f.tag = std::move(tag);
  f.name = std::move(name);
  f.cls = CoordClass::Oqm;
  f.mechanics = Mechanics::OQM;
  f.m = m;
  f.slots = std::move(slots);
  f.potential = [](const ParamBinding& p) -> RationalFn {
    throw NotIdQM(family_tag(p.family) + ": no potential V in ordinary quantum mechanics");
  };
  const std::vector<std::string> names = f.slots;
  f.validate = [names](const ParamBinding& p) {
    for (const auto& n : names) {
      if (!p.at(n).is_real()) throw InvalidBinding(family_tag(p.family) + ": parameter " + n + " must be real");
    }
  };
  return f;
}

ParamBinding add_to(const ParamBinding& p, std::initializer_list<const char*> names, const S& d) {
  return map_slots(p, names, [&](const S& v) { return v + d; });
}

}  // namespace

FamilyDescriptor make_He() {
  FamilyDescriptor f = oqm_skeleton(FamilyId::He, "He", "Hermite", 0, {});
  f.physical = [](const ParamBinding&) { return true; };
  f.shift = [](const ParamBinding& p, int) { return p; };
  f.build = [](const ParamBinding&, int n) {
    // n! sum_k (-1)^k (2 eta)^{n-2k} / (k! (n-2k)!)
    std::vector<S> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; 2 * k <= n; ++k) {
      const S sign(k % 2 == 0 ? 1 : -1);
      c[static_cast<std::size_t>(n - 2 * k)] =
          factorial(n) * sign * S(2).pow(n - 2 * k) / (factorial(k) * factorial(n - 2 * k));
    }
    return LaurentPoly::from_coeffs(Var::X, 0, c);
  };
  f.spectral = [](const ParamBinding&, int n) { return SpectralData{S(2 * n), S(2 * n), S(1)}; };
  f.leading = [](const ParamBinding&, int n) { return S(2).pow(n); };
  f.oqm = [](const ParamBinding&) { return OqmData{eta_lin(0, -half()), LaurentPoly::constant(Var::X, S::frac(1, 4)), S(1)}; };
  f.c_phi = [](const ParamBinding&) { return S(1); };
  f.zeros = [](const ParamBinding&) { return std::vector<ZeroPoint>{}; };
  f.default_bindings = [] { return std::vector<ParamBinding>{lit(FamilyId::He, {})}; };
  return f;
}

FamilyDescriptor make_L() {
  FamilyDescriptor f = oqm_skeleton(FamilyId::L, "L", "Laguerre", 1, {"g"});
  f.physical = [](const ParamBinding& p) { return p.at("g").re() > Rational(1, 2); };
  f.shift = [](const ParamBinding& p, int k) { return add_to(p, {"g"}, S(k)); };
  f.build = [](const ParamBinding& p, int n) {
    const S g = p.at("g");
    const LaurentPoly sum = hyper_sum(
        Var::X, n, [&](int k) { return S(k - n) / ((g + half() + k) * S(k + 1)); },
        [](int) { return LaurentPoly::monomial(Var::X, 1); });
    return sum * (rp(g + half(), n) / factorial(n));
  };
  f.spectral = [](const ParamBinding&, int n) { return SpectralData{S(4 * n), S(-2), S(-2 * (n + 1))}; };
  f.leading = [](const ParamBinding&, int n) { return S(n % 2 == 0 ? 1 : -1) / factorial(n); };
  f.oqm = [](const ParamBinding& p) {
    return OqmData{eta_lin(p.at("g") + half(), -1), LaurentPoly::monomial(Var::X, 1), S(2)};
  };
  f.c_phi = [](const ParamBinding&) { return S(1); };
  f.zeros = [](const ParamBinding&) { return std::vector<ZeroPoint>{{S(0), S(0), 1}}; };
  f.value_at_zero = [](const ParamBinding& p, int, int n) { return rp(p.at("g") + half(), n) / factorial(n); };
  f.closed_form = [](const ParamBinding& p, int n) {
    const S g = p.at("g");
    ClosedForm cf;
    cf.alpha = {-(g + half() + n) / S(n + 1), S(1)};
    cf.beta = S(-(n + 1));
    cf.beta_F = S(2 * (n + 1));
    cf.D = S(1);
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{lit(FamilyId::L, {{"g", "1"}}), lit(FamilyId::L, {{"g", "3/4"}}),
                                     lit(FamilyId::L, {{"g", "7/3"}})};
  };
  return f;
}

FamilyDescriptor make_J() {
  FamilyDescriptor f = oqm_skeleton(FamilyId::J, "J", "Jacobi", 2, {"g", "h"});
  f.physical = [](const ParamBinding& p) {
    return p.at("g").re() > Rational(1, 2) && p.at("h").re() > Rational(1, 2);
  };
  f.shift = [](const ParamBinding& p, int k) { return add_to(p, {"g", "h"}, S(k)); };
  f.build = [](const ParamBinding& p, int n) {
    const S g = p.at("g"), h = p.at("h");
    const LaurentPoly sum = hyper_sum(
        Var::X, n, [&](int k) { return S(k - n) * (g + h + n + k) / ((g + half() + k) * S(k + 1)); },
        [](int) { return eta_lin(half(), -half()); });
    return sum * (rp(g + half(), n) / factorial(n));
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const S gh = p.at("g") + p.at("h");
    return SpectralData{S(4 * n) * (gh + n), S(-2) * (gh + n), S(-2 * (n + 1))};
  };
  f.leading = [](const ParamBinding& p, int n) {
    return rp(p.at("g") + p.at("h") + n, n) / (S(2).pow(n) * factorial(n));
  };
  f.oqm = [](const ParamBinding& p) {
    const S g = p.at("g"), h = p.at("h");
    return OqmData{eta_lin(h - g, -(g + h + 1)), LaurentPoly::from_coeffs(Var::X, 0, {1, 0, -1}), S(-4)};
  };
  f.c_phi = [](const ParamBinding&) { return S::frac(-1, 4); };
  f.zeros = [](const ParamBinding&) { return std::vector<ZeroPoint>{{S(1), S(1), 1}, {S(-1), S(-1), 1}}; };
  f.value_at_zero = [](const ParamBinding& p, int j, int n) {
    if (j == 0) return rp(p.at("g") + half(), n) / factorial(n);
    return S(n % 2 == 0 ? 1 : -1) * rp(p.at("h") + half(), n) / factorial(n);
  };
  f.closed_form = [](const ParamBinding& p, int n) {
    const S g = p.at("g"), h = p.at("h");
    const S gh = g + h;
    const S N(n);
    ClosedForm cf;
    cf.alpha = {-(g + half() + n) * (h + half() + n) * (gh + 2 * n + 3) / (rp(N + 1, 2) * (gh + 2 * n + 1)),
                -(g - h) * (gh + 2 * n + 2) / ((N + 2) * (gh + 2 * n + 1)), S(1)};
    cf.beta = -rp(N + 1, 2) / rp(gh + 2 * n + 2, 2);
    cf.beta_F = S(2) * rp(N + 1, 2) * (gh + n + 1) / rp(gh + 2 * n + 2, 2);
    cf.D = -(gh + 2 * n + 1) / (N + 1);
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{lit(FamilyId::J, {{"g", "3/2"}, {"h", "2/3"}}),
                                     lit(FamilyId::J, {{"g", "5/4"}, {"h", "7/3"}}),
                                     lit(FamilyId::J, {{"g", "4/5"}, {"h", "9/4"}})};
  };
  return f;
}

FamilyDescriptor make_B() {
  FamilyDescriptor f = oqm_skeleton(FamilyId::B, "B", "Bessel", 2, {"h"});
  f.physical = [](const ParamBinding& p) { return sgn(p.at("h").re()) > 0; };
  f.shift = [](const ParamBinding& p, int k) { return add_to(p, {"h"}, S(-k)); };
  f.build = [](const ParamBinding& p, int n) {
    const S h = p.at("h");
    // 2F0(-n, n-2h; - | -eta/2)
    return hyper_sum(
        Var::X, n, [&](int k) { return S(k - n) * (S(n + k) - S(2) * h) / S(k + 1); },
        [](int) { return LaurentPoly::monomial(Var::X, 1, S::frac(-1, 2)); });
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const S e = S(n) * (S(2) * p.at("h") - n);
    return SpectralData{e, -e / S(2), S(-2)};
  };
  f.leading = [](const ParamBinding& p, int n) { return rp(S(n) - S(2) * p.at("h"), n) / S(2).pow(n); };
  f.oqm = [](const ParamBinding& p) {
    const S h = p.at("h");
    return OqmData{eta_lin(half(), (S(1) - S(2) * h) / S(4)), LaurentPoly::monomial(Var::X, 2, S::frac(1, 4)),
                   S(1)};
  };
  f.c_phi = [](const ParamBinding&) { return S(1); };
  f.zeros = [](const ParamBinding&) { return std::vector<ZeroPoint>{{S(0), S(0), 2}}; };
  f.value_at_zero = [](const ParamBinding&, int, int) { return S(1); };
  f.derivative_at_zero = [](const ParamBinding& p, int n) {
    return S(n) * (S(n) - S(2) * p.at("h")) / S(2);
  };
  f.closed_form = [](const ParamBinding& p, int n) {
    const S h = p.at("h");
    const S x = S(2 * n) - S(2) * h;  // 2n - 2h
    ClosedForm cf;
    cf.alpha = {(x + 3) / (x + 1), S(-4) * (S(n + 1) - h) / (x + 1), S(1)};
    cf.beta = S(4) / rp(x + 2, 2);
    cf.beta_F = S(2 * (n + 1)) * (S(n + 1) - S(2) * h) / rp(x + 2, 2);
    if (n >= 1) cf.D = (x + 1) / (S(n) * (S(n) - S(2) * h));
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{lit(FamilyId::B, {{"h", "9/4"}}), lit(FamilyId::B, {{"h", "7/3"}}),
                                     lit(FamilyId::B, {{"h", "11/4"}})};
  };
  return f;
}

FamilyDescriptor make_pJ() {
  FamilyDescriptor f = oqm_skeleton(FamilyId::pJ, "pJ", "pseudo Jacobi", 2, {"h", "mu"});
  f.physical = [](const ParamBinding& p) { return sgn(p.at("h").re()) > 0 && sgn(p.at("mu").re()) > 0; };
  f.shift = [](const ParamBinding& p, int k) { return add_to(p, {"h"}, S(-k)); };
  f.build = [](const ParamBinding& p, int n) {
    const S h = p.at("h"), mu = p.at("mu");
    const S c = -h + half() - I() * mu;
    const S top = S(n) - S(2) * h;
    // (1 - i eta)/2
    const LaurentPoly arg = eta_lin(half(), -I() / S(2));
    const LaurentPoly sum = hyper_sum(
        Var::X, n, [&](int k) { return S(k - n) * (top + k) / ((c + k) * S(k + 1)); },
        [&](int) { return arg; });
    return sum * ((S(-2) * I()).pow(n) * rp(c, n) / rp(top, n));
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const S h = p.at("h");
    return SpectralData{S(n) * (S(2) * h - n), S(n), S(2) * h - n - 1};
  };
  f.leading = [](const ParamBinding&, int) { return S(1); };
  f.oqm = [](const ParamBinding& p) {
    const S h = p.at("h"), mu = p.at("mu");
    return OqmData{eta_lin(-mu / S(2), (S(1) - S(2) * h) / S(4)),
                   LaurentPoly::from_coeffs(Var::X, 0, {S::frac(1, 4), 0, S::frac(1, 4)}), S(1)};
  };
  f.c_phi = [](const ParamBinding&) { return S(1); };
  f.zeros = [](const ParamBinding&) { return std::vector<ZeroPoint>{{I(), I(), 1}, {-I(), -I(), 1}}; };
  f.value_at_zero = [](const ParamBinding& p, int j, int n) {
    const S h = p.at("h"), mu = p.at("mu");
    const S pm = j == 0 ? I() : -I();
    return (S(2) * pm).pow(n) * rp(-h + half() + pm * mu, n) / rp(S(n) - S(2) * h, n);
  };
  f.closed_form = [](const ParamBinding& p, int n) {
    const S h = p.at("h"), mu = p.at("mu");
    const S x = S(2) * h - S(2 * n);  // 2h - 2n
    ClosedForm cf;
    cf.alpha = {rp(S(2) * h - n - 1, 2) * ((x - 1) * (x - 1) + S(4) * mu * mu) /
                    (S(4) * rp(h - n - 1, 2) * (x - 1) * (x - 1)),
                S(-4) * mu * (S(2) * h - n - 1) / ((x - 1) * (x - 3)), S(1)};
    cf.beta = S(1);
    cf.beta_F = S(n + 1);
    cf.D = -I() * (S(2) * h - n) / (h - n);
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{lit(FamilyId::pJ, {{"h", "7/3"}, {"mu", "1/2"}}),
                                     lit(FamilyId::pJ, {{"h", "13/5"}, {"mu", "2/3"}}),
                                     lit(FamilyId::pJ, {{"h", "11/4"}, {"mu", "3/4"}})};
  };
  return f;
}

}  // namespace askey::detail
