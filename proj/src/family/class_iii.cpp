#include "qcommon.hpp"

namespace askey::detail {

namespace {

S pair_qprod(const std::vector<S>& a, const std::function<S(const S&)>& g) {
  return pair_product(a, [&](const S& x, const S& y) { return g(x * y); });
}

/// Shared scaffolding for AW, cdqH, ASC: slots a1..a_count, z_j = a_j.
FamilyDescriptor aw_skeleton(FamilyId id, std::string tag, std::string name, int count) {
  FamilyDescriptor f;
  f.id = id;
  f.tag = std::move(tag);
  f.name = std::move(name);
  f.cls = CoordClass::III;
  f.mechanics = Mechanics::IdQM;
  f.m = count;
  f.needs_q = true;
  for (int j = 1; j <= count; ++j) f.slots.push_back("a" + std::to_string(j));
  const std::vector<std::string> slots = f.slots;

  f.validate = [slots, count](const ParamBinding& p) {
    require_q(p);
    const auto a = numbered_slots(p, count);
    if (!conjugation_closed(a)) {
      throw InvalidBinding(family_tag(p.family) + ": parameters are not closed under conjugation");
    }
  };
  f.physical = [count](const ParamBinding& p) { return all_inside_unit_disk(numbered_slots(p, count)); };
  f.shift = [slots](const ParamBinding& p, int k) { return scale_slots(p, slots, k); };
  f.potential = [count](const ParamBinding& p) { return q_potential(numbered_slots(p, count), p.q()); };
  f.zeros = [count](const ParamBinding& p) {
    std::vector<ZeroPoint> z;
    for (const S& a : numbered_slots(p, count)) z.push_back(unit_circle_zero(a));
    return z;
  };
  f.value_at_zero = [count](const ParamBinding& p, int j, int n) {
    const auto a = numbered_slots(p, count);
    const S q = p.q();
    S out = a[j].pow(-n);
    for (int k = 0; k < count; ++k) {
      if (k != j) out *= qpoch(a[j] * a[k], q, n);
    }
    return out;
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const S s = p.s();
    const S e = s.pow(-2 * n) - 1;
    return SpectralData{e, s.pow(n) * e, s.pow(-(n + 1))};
  };
  f.leading = [](const ParamBinding&, int n) { return S(2).pow(n); };
  return f;
}

/// Build for the AW-type sums: prefactor (a1 a_k; q)_n / a1^n times the basic sum.
LaurentPoly aw_type_build(const ParamBinding& p, int n, int count, const std::vector<S>& extra_nums) {
  const auto a = numbered_slots(p, count);
  const S q = p.q();
  std::vector<S> dens;
  S pre = a[0].pow(-n);
  for (int k = 1; k < count; ++k) {
    dens.push_back(a[0] * a[k]);
    pre *= qpoch(a[0] * a[k], q, n);
  }
  if (count < 3) dens.push_back(S(0));
  if (count < 2) dens.push_back(S(0));
  return qsum(q, n, extra_nums, dens, a[0]) * pre;
}

}  // namespace

FamilyDescriptor make_AW() {
  FamilyDescriptor f = aw_skeleton(FamilyId::AW, "AW", "Askey-Wilson", 4);
  f.build = [](const ParamBinding& p, int n) {
    const auto a = numbered_slots(p, 4);
    const S b4 = a[0] * a[1] * a[2] * a[3];
    return aw_type_build(p, n, 4, {b4 * p.q().pow(n - 1)});
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const auto a = numbered_slots(p, 4);
    const S b4 = a[0] * a[1] * a[2] * a[3];
    const S q = p.q();
    const S s = p.s();
    const S e = (q.pow(-n) - 1) * (S(1) - b4 * q.pow(n - 1));
    return SpectralData{e, s.pow(n) * e, s.pow(-(n + 1))};
  };
  f.leading = [](const ParamBinding& p, int n) {
    const auto a = numbered_slots(p, 4);
    const S b4 = a[0] * a[1] * a[2] * a[3];
    return S(2).pow(n) * qpoch(b4 * p.q().pow(n - 1), p.q(), n);
  };
  f.c_phi = [](const ParamBinding& p) {
    const auto a = numbered_slots(p, 4);
    return S(16) * a[0] * a[1] * a[2] * a[3];
  };
  f.closed_form = [](const ParamBinding& p, int n) {
    const auto a = numbered_slots(p, 4);
    const auto e = elementary(a);
    const S b1 = e[1], b2 = e[2], b3 = e[3], b4 = e[4];
    const S q = p.q();
    const S s = p.s();
    auto Q = [&](int k) { return q.pow(k); };
    const S q3 = S(1) + q + q * q;
    ClosedForm cf;
    cf.alpha.resize(5);
    cf.alpha[4] = 1;
    cf.alpha[3] = -(S(1) - b4 * Q(2 * n + 5)) / (S(1) - b4 * Q(2 * n + 2)) * b4.inverse() *
                  (b3 - q3 * (b1 - b3 * Q(n + 2)) * b4 * Q(n + 1) - b1 * b4 * b4 * Q(3 * n + 6));
    cf.alpha[2] =
        (S(1) - b4 * Q(2 * n + 3)) * (S(1) - b4 * Q(2 * n + 6)) /
        ((S(1) - b4 * Q(2 * n + 1)) * (S(1) - b4 * Q(2 * n + 2))) * b4.inverse() *
        (b2 * (S(1) - b4 * Q(2 * n + 2)) * (S(1) + b4 * Q(2 * n + 3)) * (S(1) - b4 * Q(2 * n + 4)) +
         q3 * (b3 * b3 + b1 * b1 * b4) * (S(1) + b4 * Q(2 * n + 3)) * Q(2 * n + 2) -
         (S(1) + q) * (q * b1 * b3 + (S(1) + q * q) * b4) * (S(1) + b4 * b4 * Q(4 * n + 6)) * Q(n) -
         (S(1) + q) * (q * (S(1) + q) * (S(1) + q) * b1 * b3 - (S(1) + q * q) * (S(1) + q * q) * b4) * b4 *
             Q(3 * n + 2));
    cf.alpha[1] = -pair_qprod(a, [&](const S& ab) { return S(1) - ab * Q(n + 1); }) *
                  (S(1) - b4 * Q(2 * n + 5)) * (S(1) - b4 * Q(2 * n + 6)) /
                  ((S(1) - b4 * Q(2 * n)) * (S(1) - b4 * Q(2 * n + 2))) * b4.inverse() *
                  (b1 - q3 * (b3 - b1 * b4 * Q(n + 1)) * Q(n) - b3 * b4 * Q(3 * n + 3));
    cf.alpha[0] = pair_qprod(a, [&](const S& ab) { return qpoch(ab * Q(n), q, 2); }) *
                  qpoch(b4 * Q(2 * n + 4), q, 3) / qpoch(b4 * Q(2 * n), q, 3) * b4.inverse();
    cf.beta = b4 / qpoch(b4 * Q(2 * n + 3), q, 4);
    cf.beta_F = b4 * Q(-n) * s.pow(-3) * qpoch(Q(n + 1), q, 2) * qpoch(b4 * Q(n + 1), q, 2) /
                qpoch(b4 * Q(2 * n + 3), q, 4);
    cf.D = pair_product(a, [&](const S& x, const S& y) { return (x - y) * (S(1) - x * y * Q(n)); }) *
           b4.pow(-3) * qpoch(b4 * Q(2 * n), q, 3) * qpoch(b4 * Q(2 * n + 2), q, 3);
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::AW, {{"a1", "1/2"}, {"a2", "1/3"}, {"a3", "-1/5"}, {"a4", "1/7"}}, "1/2"),
        lit(FamilyId::AW, {{"a1", "2/3"}, {"a2", "-1/4"}, {"a3", "3/7"}, {"a4", "1/5"}}, "1/3"),
        lit(FamilyId::AW, {{"a1", "1/3+1/4i"}, {"a2", "1/3-1/4i"}, {"a3", "1/2"}, {"a4", "-2/5"}}, "2/3"),
    };
  };
  return f;
}

FamilyDescriptor make_cdqH() {
  FamilyDescriptor f = aw_skeleton(FamilyId::cdqH, "cdqH", "continuous dual q-Hahn", 3);
  f.build = [](const ParamBinding& p, int n) { return aw_type_build(p, n, 3, {}); };
  f.c_phi = [](const ParamBinding& p) {
    const auto a = numbered_slots(p, 3);
    return S(-8) * a[0] * a[1] * a[2];
  };
  f.closed_form = [](const ParamBinding& p, int n) {
    const auto a = numbered_slots(p, 3);
    const auto e = elementary(a);
    const S b1 = e[1], b2 = e[2], b3 = e[3];
    const S q = p.q();
    const S s = p.s();
    auto Q = [&](int k) { return q.pow(k); };
    const S q3 = S(1) + q + q * q;
    ClosedForm cf;
    cf.alpha = {
        -pair_qprod(a, [&](const S& ab) { return qpoch(ab * Q(n), q, 2); }) * b3.inverse(),
        pair_qprod(a, [&](const S& ab) { return S(1) - ab * Q(n + 1); }) * b3.inverse() *
            (b1 - q3 * b3 * Q(n)),
        -b3.inverse() * (b2 - (S(1) + q) * b1 * b3 * Q(n + 1) + q3 * b3 * b3 * Q(2 * n + 2)),
        S(1)};
    cf.beta = -b3;
    cf.beta_F = -b3 * Q(-n) * s.pow(-3) * qpoch(Q(n + 1), q, 2);
    cf.D = pair_product(a, [&](const S& x, const S& y) { return (x - y) * (S(1) - x * y * Q(n)); }) *
           b3.pow(-2);
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::cdqH, {{"a1", "1/2"}, {"a2", "1/3"}, {"a3", "-1/5"}}, "1/2"),
        lit(FamilyId::cdqH, {{"a1", "2/3"}, {"a2", "-1/4"}, {"a3", "3/7"}}, "1/3"),
        lit(FamilyId::cdqH, {{"a1", "1/3+1/4i"}, {"a2", "1/3-1/4i"}, {"a3", "1/2"}}, "2/3"),
    };
  };
  return f;
}

FamilyDescriptor make_ASC() {
  FamilyDescriptor f = aw_skeleton(FamilyId::ASC, "ASC", "Al-Salam-Chihara", 2);
  f.build = [](const ParamBinding& p, int n) { return aw_type_build(p, n, 2, {}); };
  f.c_phi = [](const ParamBinding& p) { return S(4) * p.at("a1") * p.at("a2"); };
  f.closed_form = [](const ParamBinding& p, int n) {
    const S a1 = p.at("a1");
    const S a2 = p.at("a2");
    const S ab = a1 * a2;
    const S q = p.q();
    auto Q = [&](int k) { return q.pow(k); };
    ClosedForm cf;
    cf.alpha = {qpoch(ab * Q(n), q, 2) / ab, -(a1 + a2) * (S(1) - ab * Q(n + 1)) / ab, S(1)};
    cf.beta = ab;
    cf.beta_F = ab * Q(-n) * p.s().pow(-3) * qpoch(Q(n + 1), q, 2);
    cf.D = (a1 - a2) * (S(1) - ab * Q(n)) / ab;
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::ASC, {{"a1", "1/2"}, {"a2", "-1/3"}}, "1/2"),
        lit(FamilyId::ASC, {{"a1", "2/5"}, {"a2", "3/7"}}, "1/3"),
        lit(FamilyId::ASC, {{"a1", "1/3+1/4i"}, {"a2", "1/3-1/4i"}}, "2/3"),
    };
  };
  return f;
}

FamilyDescriptor make_cbqHe() {
  FamilyDescriptor f;
  f.id = FamilyId::cbqHe;
  f.tag = "cbqHe";
  f.name = "continuous big q-Hermite";
  f.cls = CoordClass::III;
  f.mechanics = Mechanics::IdQM;
  f.m = 1;
  f.needs_q = true;
  f.slots = {"a"};
  f.validate = [](const ParamBinding& p) {
    require_q(p);
    require_real(p, {"a"});
  };
  f.physical = [](const ParamBinding& p) { return abs_less_than_one(p.at("a")); };
  f.shift = [](const ParamBinding& p, int k) { return scale_slots(p, {"a"}, k); };
  f.build = [](const ParamBinding& p, int n) {
    const S a = p.at("a");
    return qsum(p.q(), n, {}, {S(0), S(0)}, a) * a.pow(-n);
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const S s = p.s();
    const S e = s.pow(-2 * n) - 1;
    return SpectralData{e, s.pow(n) * e, s.pow(-(n + 1))};
  };
  f.leading = [](const ParamBinding&, int n) { return S(2).pow(n); };
  f.potential = [](const ParamBinding& p) { return q_potential({p.at("a")}, p.q()); };
  f.c_phi = [](const ParamBinding& p) { return S(-2) * p.at("a"); };
  f.zeros = [](const ParamBinding& p) { return std::vector<ZeroPoint>{unit_circle_zero(p.at("a"))}; };
  f.value_at_zero = [](const ParamBinding& p, int, int n) { return p.at("a").pow(-n); };
  f.closed_form = [](const ParamBinding& p, int n) {
    const S a = p.at("a");
    const S q = p.q();
    ClosedForm cf;
    cf.alpha = {-a.inverse(), S(1)};
    cf.beta = -a;
    cf.beta_F = -a * q.pow(-n) * p.s().pow(-3) * qpoch(q.pow(n + 1), q, 2);
    cf.D = S(1);
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::cbqHe, {{"a", "1/2"}}, "1/2"),
        lit(FamilyId::cbqHe, {{"a", "-2/5"}}, "1/3"),
        lit(FamilyId::cbqHe, {{"a", "3/7"}}, "2/3"),
    };
  };
  return f;
}

FamilyDescriptor make_cqHe() {
  FamilyDescriptor f;
  f.id = FamilyId::cqHe;
  f.tag = "cqHe";
  f.name = "continuous q-Hermite";
  f.cls = CoordClass::III;
  f.mechanics = Mechanics::IdQM;
  f.m = 0;
  f.needs_q = true;
  f.validate = [](const ParamBinding& p) { require_q(p); };
  f.physical = [](const ParamBinding&) { return true; };
  f.shift = [](const ParamBinding& p, int) { return p; };
  f.build = [](const ParamBinding& p, int n) {
    const S q = p.q();
    // z^n 2phi0(q^{-n}, 0; - | q, q^n z^{-2})
    const LaurentPoly sum = hyper_sum(
        Var::Z, n,
        [&](int k) { return -(S(1) - q.pow(k - n)) / (S(1) - q.pow(k + 1)) * q.pow(n - k); },
        [](int) { return LaurentPoly::monomial(Var::Z, -2); });
    return sum.shifted_exponents(n);
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const S s = p.s();
    const S e = s.pow(-2 * n) - 1;
    return SpectralData{e, s.pow(n) * e, s.pow(-(n + 1))};
  };
  f.leading = [](const ParamBinding&, int n) { return S(2).pow(n); };
  f.potential = [](const ParamBinding& p) { return q_potential({}, p.q()); };
  f.c_phi = [](const ParamBinding&) { return S(1); };
  f.zeros = [](const ParamBinding&) { return std::vector<ZeroPoint>{}; };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::cqHe, {}, "1/2"),
        lit(FamilyId::cqHe, {}, "1/3"),
        lit(FamilyId::cqHe, {}, "2/3"),
    };
  };
  return f;
}

// q^{(alpha+1/2)/2} = t and q^{(beta+1/2)/2} = u keep every quarter power of q rational.
FamilyDescriptor make_cqJ() {
  FamilyDescriptor f;
  f.id = FamilyId::cqJ;
  f.tag = "cqJ";
  f.name = "continuous q-Jacobi";
  f.cls = CoordClass::III;
  f.mechanics = Mechanics::IdQM;
  f.m = 4;
  f.needs_q = true;
  f.slots = {"t", "u"};
  f.validate = [](const ParamBinding& p) {
    require_q(p);
    require_real(p, {"t", "u"});
  };
  f.physical = [](const ParamBinding& p) {
    for (const char* k : {"t", "u"}) {
      const S v = p.at(k);
      if (sgn(v.re()) <= 0 || v.re() > 1) return false;
    }
    return true;
  };
  f.shift = [](const ParamBinding& p, int k) { return scale_slots(p, {"t", "u"}, k); };
  f.build = [](const ParamBinding& p, int n) {
    const S t = p.at("t"), u = p.at("u"), s = p.s(), q = p.q();
    const S tu = t * u;
    return qsum(q, n, {tu * tu * q.pow(n)}, {t * t * s, -tu, -tu * s}, t) *
           (qpoch(t * t * s, q, n) / qpoch(q, q, n));
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const S t = p.at("t"), u = p.at("u"), s = p.s(), q = p.q();
    const S tu = t * u;
    const S e = (q.pow(-n) - 1) * (S(1) - q.pow(n) * tu * tu);
    const S fn = t * s * q.pow(-n) * (S(1) - q.pow(n) * tu * tu) / ((S(1) + tu) * (S(1) + tu * s));
    const S bn = (t * s).inverse() * (S(1) - q.pow(n + 1)) * (S(1) + tu) * (S(1) + tu * s);
    return SpectralData{e, fn, bn};
  };
  f.leading = [](const ParamBinding& p, int n) {
    const S t = p.at("t"), u = p.at("u"), s = p.s(), q = p.q();
    const S tu = t * u;
    return S(2).pow(n) * t.pow(n) * qpoch(tu * tu * q.pow(n), q, n) /
           (qpoch(q, q, n) * qpoch(-tu, q, n) * qpoch(-tu * s, q, n));
  };
  f.potential = [](const ParamBinding& p) {
    const S t = p.at("t"), u = p.at("u"), s = p.s();
    return q_potential({t, t * s, -u, -u * s}, p.q());
  };
  f.c_phi = [](const ParamBinding& p) {
    const S t = p.at("t"), u = p.at("u"), s = p.s();
    return S(16) * (t * u * s).pow(2);
  };
  f.zeros = [](const ParamBinding& p) {
    const S t = p.at("t"), u = p.at("u"), s = p.s();
    return std::vector<ZeroPoint>{unit_circle_zero(t), unit_circle_zero(t * s), unit_circle_zero(-u),
                                  unit_circle_zero(-u * s)};
  };
  f.value_at_zero = [](const ParamBinding& p, int j, int n) {
    const S t = p.at("t"), u = p.at("u"), s = p.s(), q = p.q();
    const S tu = t * u;
    const S sign(n % 2 == 0 ? 1 : -1);
    const S ratio = (S(1) + tu * q.pow(n)) / (S(1) + tu);
    const S pt = qpoch(t * t * s, q, n) / qpoch(q, q, n);
    const S pu = qpoch(u * u * s, q, n) / qpoch(q, q, n);
    switch (j) {
      case 0:
        return pt;
      case 1:
        return s.pow(-n) * pt * ratio;
      case 2:
        return sign * (t / u).pow(n) * pu;
      default:
        return sign * (t / (u * s)).pow(n) * pu * ratio;
    }
  };
  f.closed_form = [](const ParamBinding& p, int n) {
    const S t = p.at("t"), u = p.at("u"), s = p.s(), q = p.q();
    auto Q = [&](int k) { return q.pow(k); };
    const S tu = t * u;
    const S h = tu / s;  // q^{(alpha+beta)/2}
    const S qn = Q(n);
    ClosedForm cf;
    cf.alpha.resize(5);
    cf.alpha[4] = 1;
    cf.alpha[3] = (t - u) / (u * s) * (S(1) + s) * (S(1) + h * Q(n + 3)) * (S(1) - tu * Q(3) * qn) /
                  ((S(1) - Q(n + 4)) * (S(1) - h * Q(n + 2)));
    const S x = S(1) + tu * Q(2) * qn;
    cf.alpha[2] = s / (u * u) * (S(1) - tu * Q(2) * qn) * (S(1) - h * Q(n + 4)) /
                  (qpoch(Q(n + 3), q, 2) * qpoch(tu * q * qn, s, 2)) *
                  ((S(1) + q) * tu / s.pow(3) * ((S(1) + s) * (S(1) + s) * h * Q(n + 2) - x * x) +
                   (t - u) * (t - u) / (s * s) * ((S(1) + q) * h * Q(n + 2) + x * x));
    cf.alpha[1] = -t * (t - u) / (u * u * s * s) * (S(1) + s) * (S(1) - t * t * s.pow(3) * qn) *
                  (S(1) - u * u * s.pow(3) * qn) * (S(1) + h * Q(n + 2)) /
                  (qpoch(Q(n + 2), q, 3) * qpoch(h * Q(n + 1), q, 2)) * qpoch(tu * Q(3) * qn, s, 2);
    cf.alpha[0] = t * t / (u * u * s * s) * qpoch(t * t * s * qn, q, 2) * qpoch(u * u * s * qn, q, 2) *
                  qpoch(h * Q(n + 3), s, 3) / (qpoch(Q(n + 1), q, 4) * qpoch(h * Q(n + 1), s, 3));
    cf.beta = qpoch(Q(n + 1), q, 4) * qpoch(-tu, s, 4) /
              (t * t / (u * u * s * s) * q.pow(-n) * qpoch(tu * Q(2) * qn, s, 4));
    cf.beta_F = u * u / s * q.pow(-n) * qpoch(Q(n + 1), q, 4) * qpoch(tu * tu * Q(2) * qn, q, 2) /
                qpoch(tu * Q(2) * qn, s, 4);
    const S pre = -t * (S(1) - s) * (S(1) - s) * (t + u) * (t + u) * (t + u * s) * (t * s + u) /
                  (u.pow(5) * s.pow(5));
    cf.D = pre * (S(1) - t * t * s * qn) * (S(1) - u * u * s * qn) * qpoch(h * Q(n + 1), s, 3) *
           qpoch(h * Q(n + 2), s, 3) /
           ((S(1) - Q(n + 1)).pow(3) * (S(1) - Q(n + 2)).pow(2) * (S(1) - Q(n + 3)) *
            (S(1) + tu * qn).pow(2));
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::cqJ, {{"t", "1/3"}, {"u", "1/5"}}, "1/2"),
        lit(FamilyId::cqJ, {{"t", "1/2"}, {"u", "2/7"}}, "1/3"),
        lit(FamilyId::cqJ, {{"t", "3/5"}, {"u", "1/4"}}, "2/3"),
    };
  };
  return f;
}

FamilyDescriptor make_cqL() {
  FamilyDescriptor f;
  f.id = FamilyId::cqL;
  f.tag = "cqL";
  f.name = "continuous q-Laguerre";
  f.cls = CoordClass::III;
  f.mechanics = Mechanics::IdQM;
  f.m = 2;
  f.needs_q = true;
  f.slots = {"t"};
  f.validate = [](const ParamBinding& p) {
    require_q(p);
    require_real(p, {"t"});
  };
  f.physical = [](const ParamBinding& p) {
    const S t = p.at("t");
    return sgn(t.re()) > 0 && t.re() <= 1;
  };
  f.shift = [](const ParamBinding& p, int k) { return scale_slots(p, {"t"}, k); };
  f.build = [](const ParamBinding& p, int n) {
    const S t = p.at("t"), s = p.s(), q = p.q();
    return qsum(q, n, {}, {t * t * s, S(0)}, t) * (qpoch(t * t * s, q, n) / qpoch(q, q, n));
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const S t = p.at("t"), s = p.s(), q = p.q();
    return SpectralData{q.pow(-n) - 1, t * s * q.pow(-n), (t * s).inverse() * (S(1) - q.pow(n + 1))};
  };
  f.leading = [](const ParamBinding& p, int n) {
    return S(2).pow(n) * p.at("t").pow(n) / qpoch(p.q(), p.q(), n);
  };
  f.potential = [](const ParamBinding& p) {
    const S t = p.at("t");
    return q_potential({t, t * p.s()}, p.q());
  };
  f.c_phi = [](const ParamBinding& p) {
    const S t = p.at("t");
    return S(4) * t * t * p.s();
  };
  f.zeros = [](const ParamBinding& p) {
    const S t = p.at("t");
    return std::vector<ZeroPoint>{unit_circle_zero(t), unit_circle_zero(t * p.s())};
  };
  f.value_at_zero = [](const ParamBinding& p, int j, int n) {
    const S t = p.at("t"), s = p.s(), q = p.q();
    const S v = qpoch(t * t * s, q, n) / qpoch(q, q, n);
    return j == 0 ? v : v * s.pow(-n);
  };
  f.closed_form = [](const ParamBinding& p, int n) {
    const S t = p.at("t"), s = p.s(), q = p.q();
    auto Q = [&](int k) { return q.pow(k); };
    ClosedForm cf;
    cf.alpha = {qpoch(t * t * s * Q(n), q, 2) / (s * qpoch(Q(n + 1), q, 2)),
                -(S(1) + s) * (S(1) - t * t * s * Q(n + 1)) / (s * (S(1) - Q(n + 2))), S(1)};
    cf.beta = Q(n) * s * qpoch(Q(n + 1), q, 2);
    cf.beta_F = t * t * Q(-n) * s.pow(-2) * qpoch(Q(n + 1), q, 2);
    cf.D = (S(1) - s) * (S(1) - t * t * s * Q(n)) / (s * (S(1) - Q(n + 1)));
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::cqL, {{"t", "1/3"}}, "1/2"),
        lit(FamilyId::cqL, {{"t", "1/2"}}, "1/3"),
        lit(FamilyId::cqL, {{"t", "3/5"}}, "2/3"),
    };
  };
  return f;
}

}  // namespace askey::detail
