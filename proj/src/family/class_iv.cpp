#include "qcommon.hpp"

namespace askey::detail {

FamilyDescriptor make_cqH() {
  FamilyDescriptor f;
  f.id = FamilyId::cqH;
  f.tag = "cqH";
  f.name = "continuous q-Hahn";
  f.cls = CoordClass::IV;
  f.mechanics = Mechanics::IdQM;
  f.m = 4;
  f.needs_q = true;
  f.needs_phi = true;
  f.slots = {"a1", "a2"};
  f.validate = [](const ParamBinding& p) {
    require_q(p);
    require_phi(p);
    require_conj_closed(p, {"a1", "a2"});
  };
  f.physical = [](const ParamBinding& p) { return all_inside_unit_disk(numbered_slots(p, 2)); };
  f.shift = [](const ParamBinding& p, int k) { return scale_slots(p, {"a1", "a2"}, k); };
  f.build = [](const ParamBinding& p, int n) {
    const S a1 = p.at("a1"), a2 = p.at("a2"), q = p.q(), w = p.w();
    const S w2 = w * w;
    const S A = (a1 * a2).pow(2);
    const S pre = qpoch(a1 * a1, q, n) * qpoch(a1 * a2, q, n) * qpoch(a1 * a2 * w2, q, n) /
                  (a1.pow(n) * w.pow(n));
    return qsum(q, n, {A * q.pow(n - 1)}, {a1 * a1, a1 * a2, a1 * a2 * w2}, a1, w2) * pre;
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const S a1 = p.at("a1"), a2 = p.at("a2"), q = p.q(), s = p.s();
    const S A = (a1 * a2).pow(2);
    const S e = (q.pow(-n) - 1) * (S(1) - A * q.pow(n - 1));
    return SpectralData{e, s.pow(n) * e, s.pow(-(n + 1))};
  };
  f.leading = [](const ParamBinding& p, int n) {
    const S A = (p.at("a1") * p.at("a2")).pow(2);
    return S(2).pow(n) * qpoch(A * p.q().pow(n - 1), p.q(), n);
  };
  f.potential = [](const ParamBinding& p) {
    const S a1 = p.at("a1"), a2 = p.at("a2"), w = p.w();
    const S w2 = w * w;
    return q_potential({a1, a2, a1 * w2, a2 * w2}, p.q(), w2);
  };
  f.c_phi = [](const ParamBinding& p) { return S(16) * (p.at("a1") * p.at("a2")).pow(2); };
  f.zeros = [](const ParamBinding& p) {
    const S a1 = p.at("a1"), a2 = p.at("a2"), w = p.w();
    const S wb2 = (w * w).inverse();
    return std::vector<ZeroPoint>{unit_circle_zero(a1, w), unit_circle_zero(a2, w),
                                  unit_circle_zero(a1 * wb2, w), unit_circle_zero(a2 * wb2, w)};
  };
  f.value_at_zero = [](const ParamBinding& p, int j, int n) {
    const S a1 = p.at("a1"), a2 = p.at("a2"), q = p.q(), w = p.w();
    const S aj = (j % 2 == 0) ? a1 : a2;
    const S wj = (j < 2) ? w : w.inverse();
    return qpoch(aj * aj, q, n) * qpoch(a1 * a2, q, n) * qpoch(a1 * a2 * wj * wj, q, n) /
           (aj.pow(n) * wj.pow(n));
  };
  f.closed_form = [](const ParamBinding& p, int n) {
    const S a1 = p.at("a1"), a2 = p.at("a2"), q = p.q(), s = p.s(), w = p.w();
    auto Q = [&](int k) { return q.pow(k); };
    const S w2 = w * w;
    const S wb2 = w2.inverse();
    const S ab = a1 * a2;
    const S A = ab * ab;
    const S c1 = cos_phi(w);
    const S c2 = cos_2phi(w);
    const S sn = sin_phi(w);
    const S sum = a1 + a2;
    ClosedForm cf;
    cf.alpha.resize(5);
    cf.alpha[4] = 1;
    cf.alpha[3] = S(-2) * c1 * sum * (S(1) - A * Q(2 * n + 5)) * qpoch(ab * Q(n + 1), q, 3) /
                  (ab * (S(1) - A * Q(2 * n + 2)));
    cf.alpha[2] =
        qpoch(A * Q(2 * n + 3), q.pow(3), 2) * qpoch(ab * Q(n + 1), q, 2) / (A * qpoch(A * Q(2 * n + 1), q, 2)) *
        (ab * qpoch(-ab * Q(n + 1), q, 2) *
             (S(2) * (S(1) + A * Q(2 * n + 3)) * c2 - (S(1) + q) * (S(1) + q * q) * ab * Q(n)) +
         sum * sum *
             (S(1) - (S(1) + q) * Q(n + 1) * (S(1) + S(2) * c2) * ab * (S(1) + A * Q(2 * n + 3)) +
              A * Q(2 * n + 2) * (S(2) * q + S(2) * (S(1) + q * q) * (S(1) + c2) + A * Q(2 * n + 4))));
    cf.alpha[1] = S(-2) * c1 * sum * qpoch(A * Q(2 * n + 5), q, 2) * qpoch(ab * Q(n), q, 3) *
                  (S(1) - ab * Q(n + 1)).pow(2) / (A * qpoch(A * Q(2 * n), q * q, 2)) *
                  (S(1) - a1 * a1 * Q(n + 1)) * (S(1) - a2 * a2 * Q(n + 1)) * (S(1) - ab * w2 * Q(n + 1)) *
                  (S(1) - ab * wb2 * Q(n + 1));
    cf.alpha[0] = qpoch(A * Q(2 * n + 4), q, 3) * qpoch(ab * Q(n), q, 2).pow(2) *
                  qpoch(a1 * a1 * Q(n), q, 2) * qpoch(a2 * a2 * Q(n), q, 2) * qpoch(ab * w2 * Q(n), q, 2) *
                  qpoch(ab * wb2 * Q(n), q, 2) / (A * qpoch(A * Q(2 * n), q, 3));
    cf.beta = A / qpoch(A * Q(2 * n + 3), q, 4);
    cf.beta_F = A * Q(-n) * s.pow(-3) * qpoch(Q(n + 1), q, 2) * qpoch(A * Q(n + 1), q, 2) /
                qpoch(A * Q(2 * n + 3), q, 4);
    cf.D = S(4) * sn * sn * ab.pow(-5) * (a1 - a2).pow(2) * (a1 - a2 * w2) * (a1 - a2 * wb2) *
           (S(1) - a1 * a1 * Q(n)) * (S(1) - a2 * a2 * Q(n)) * (S(1) - ab * Q(n)).pow(2) *
           (S(1) - ab * w2 * Q(n)) * (S(1) - ab * wb2 * Q(n)) * qpoch(A * Q(2 * n), q, 3) *
           qpoch(A * Q(2 * n + 2), q, 3);
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::cqH, {{"a1", "1/2"}, {"a2", "1/3"}}, "1/2", "3/5+4/5i"),
        lit(FamilyId::cqH, {{"a1", "2/5"}, {"a2", "-1/4"}}, "1/3", "4/5+3/5i"),
        lit(FamilyId::cqH, {{"a1", "1/3+1/4i"}, {"a2", "1/3-1/4i"}}, "2/3", "5/13+12/13i"),
    };
  };
  return f;
}

FamilyDescriptor make_qMP() {
  FamilyDescriptor f;
  f.id = FamilyId::qMP;
  f.tag = "qMP";
  f.name = "q-Meixner-Pollaczek";
  f.cls = CoordClass::IV;
  f.mechanics = Mechanics::IdQM;
  f.m = 2;
  f.needs_q = true;
  f.needs_phi = true;
  f.slots = {"a"};
  f.validate = [](const ParamBinding& p) {
    require_q(p);
    require_phi(p);
    require_real(p, {"a"});
  };
  f.physical = [](const ParamBinding& p) {
    const S a = p.at("a");
    return sgn(a.re()) > 0 && a.re() < 1;
  };
  f.shift = [](const ParamBinding& p, int k) { return scale_slots(p, {"a"}, k); };
  f.build = [](const ParamBinding& p, int n) {
    const S a = p.at("a"), q = p.q(), w = p.w();
    const S pre = qpoch(a * a, q, n) / (a.pow(n) * w.pow(n) * qpoch(q, q, n));
    return qsum(q, n, {}, {a * a, S(0)}, a, w * w) * pre;
  };
  f.spectral = [](const ParamBinding& p, int n) {
    const S s = p.s(), q = p.q();
    return SpectralData{q.pow(-n) - 1, s.pow(-n), s.pow(-(n + 1)) * (S(1) - q.pow(n + 1))};
  };
  f.leading = [](const ParamBinding& p, int n) { return S(2).pow(n) / qpoch(p.q(), p.q(), n); };
  f.potential = [](const ParamBinding& p) {
    const S a = p.at("a"), w = p.w();
    return q_potential({a, a * w * w}, p.q(), w * w);
  };
  f.c_phi = [](const ParamBinding& p) { return S(4) * p.at("a").pow(2); };
  f.zeros = [](const ParamBinding& p) {
    const S a = p.at("a"), w = p.w();
    return std::vector<ZeroPoint>{unit_circle_zero(a, w), unit_circle_zero(a * (w * w).inverse(), w)};
  };
  f.value_at_zero = [](const ParamBinding& p, int j, int n) {
    const S a = p.at("a"), q = p.q(), w = p.w();
    const S wj = j == 0 ? w : w.inverse();
    return qpoch(a * a, q, n) / (a.pow(n) * wj.pow(n) * qpoch(q, q, n));
  };
  f.closed_form = [](const ParamBinding& p, int n) {
    const S a = p.at("a"), q = p.q(), s = p.s(), w = p.w();
    auto Q = [&](int k) { return q.pow(k); };
    ClosedForm cf;
    cf.alpha = {qpoch(a * a * Q(n), q, 2) / (a * a * qpoch(Q(n + 1), q, 2)),
                S(-2) * cos_phi(w) * (S(1) - a * a * Q(n + 1)) / (a * (S(1) - Q(n + 2))), S(1)};
    cf.beta = a * a * qpoch(Q(n + 1), q, 2);
    cf.beta_F = a * a * Q(-n) * s.pow(-3) * qpoch(Q(n + 1), q, 2);
    cf.D = S(2) * I() * sin_phi(w) * (S(1) - a * a * Q(n)) / (a * (S(1) - Q(n + 1)));
    return cf;
  };
  f.default_bindings = [] {
    return std::vector<ParamBinding>{
        lit(FamilyId::qMP, {{"a", "1/2"}}, "1/2", "3/5+4/5i"),
        lit(FamilyId::qMP, {{"a", "1/3"}}, "1/3", "4/5+3/5i"),
        lit(FamilyId::qMP, {{"a", "3/5"}}, "2/3", "5/13+12/13i"),
    };
  };
  return f;
}

}  // namespace askey::detail
