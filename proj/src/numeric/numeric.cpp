#include "askey/numeric/numeric.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <functional>
#include <numbers>

#include "askey/christoffel.hpp"
#include "askey/errors.hpp"
#include "askey/family/representation.hpp"
#include "askey/numeric/kernels.hpp"

namespace askey::numeric {

namespace {

template <class T>
T to_real(const Rational& r) {
  if constexpr (std::is_same_v<T, double>) {
    return r.get_d();
  } else {
    mpf_class x(r, 128);
    const double hi = x.get_d();
    x -= hi;
    return static_cast<T>(hi) + static_cast<T>(x.get_d());
  }
}

template <class T>
std::complex<T> to_complex(const ExactScalar& v) {
  return {to_real<T>(v.re()), to_real<T>(v.im())};
}

template <class T>
T real_param(const ParamBinding& p, const std::string& slot) {
  const ExactScalar& v = p.at(slot);
  if (!v.is_real()) throw NonPhysicalBinding(slot + " must be real");
  return to_real<T>(v.re());
}

template <class T>
std::vector<T> real_coeffs(const std::vector<ExactScalar>& c) {
  std::vector<T> out;
  for (const ExactScalar& v : c) {
    if (!v.is_real()) throw NonPhysicalBinding("polynomial with non-real eta coefficients");
    out.push_back(to_real<T>(v.re()));
  }
  if (out.empty()) out.push_back(T(0));
  return out;
}

template <class T>
std::complex<T> lanczos_lgamma(std::complex<T> z) {
  static const T coef[9] = {T(0.99999999999980993L),  T(676.5203681218851L),     T(-1259.1392167224028L),
                            T(771.32342877765313L),   T(-176.61502916214059L),   T(12.507343278686905L),
                            T(-0.13857109526572012L), T(9.9843695780195716e-6L), T(1.5056327351493116e-7L)};
  const T pi = std::numbers::pi_v<T>;
  if (z.real() < T(0.5)) {
    return std::log(pi / std::sin(pi * z)) - lanczos_lgamma(T(1) - z);
  }
  z -= T(1);
  std::complex<T> x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (z + T(i));
  const std::complex<T> t = z + T(7.5);
  return T(0.5) * std::log(T(2) * pi) + (z + T(0.5)) * std::log(t) - t + std::log(x);
}

template <class T>
std::complex<T> qprod(std::complex<T> a, T q, int terms) {
  std::complex<T> acc(1);
  T qk(1);
  for (int k = 0; k < terms; ++k) {
    acc *= T(1) - a * qk;
    qk *= q;
  }
  return acc;
}

template <class T>
struct Model {
  T lo, hi;
  T sample_lo, sample_hi;
  std::function<T(T)> weight;
  std::function<T(T)> eta;
  std::function<T(int)> h;
};

template <class T>
Model<T> model(const FamilyDescriptor& f, const ParamBinding& p, const NumericConfig& cfg) {
  if (!numeric_supported(f.id)) throw NonPhysicalBinding(f.tag + " has no numeric weight model");
  if (!f.physical(p)) throw NonPhysicalBinding(p.digest() + " is outside the physical range");
  const T pi = std::numbers::pi_v<T>;
  const int terms = cfg.qpoch_truncation;
  Model<T> m;
  switch (f.id) {
    case FamilyId::MP: {
      const T a = real_param<T>(p, "a");
      const std::complex<T> w = to_complex<T>(p.w());
      const T phi = std::atan2(w.imag(), w.real());
      const T rate = pi - std::abs(T(2) * phi - pi);
      const T span = T(90) / rate + T(10);
      m.lo = -span;
      m.hi = span;
      m.sample_lo = T(-3);
      m.sample_hi = T(3);
      m.eta = [](T x) { return x; };
      m.weight = [=](T x) {
        return std::exp((T(2) * phi - pi) * x + T(2) * lanczos_lgamma(std::complex<T>(a, x)).real());
      };
      m.h = [=](int n) {
        return std::exp(std::log(T(2) * pi) + std::lgamma(n + T(2) * a) - std::lgamma(T(n + 1)) -
                        T(2) * a * std::log(T(2) * std::sin(phi)));
      };
      return m;
    }
    case FamilyId::AW: {
      std::vector<std::complex<T>> a;
      for (int j = 1; j <= 4; ++j) a.push_back(to_complex<T>(p.at("a" + std::to_string(j))));
      const T q = to_real<T>(p.q().re());
      m.lo = T(0);
      m.hi = pi;
      m.sample_lo = T(0);
      m.sample_hi = pi;
      m.eta = [](T x) { return std::cos(x); };
      m.weight = [=](T x) {
        const std::complex<T> e(std::cos(x), std::sin(x));
        std::complex<T> num = qprod(e * e, q, terms) * qprod(std::conj(e * e), q, terms);
        std::complex<T> den(1);
        for (const auto& aj : a) den *= qprod(aj * e, q, terms) * qprod(aj * std::conj(e), q, terms);
        return (num / den).real();
      };
      m.h = [=](int n) {
        const std::complex<T> b4 = a[0] * a[1] * a[2] * a[3];
        const T qn = std::pow(q, T(n));
        std::complex<T> num = T(2) * pi * qprod(b4 * qn * qn, q, terms);
        std::complex<T> fin(1);
        for (int k = 0; k < n; ++k) fin *= T(1) - b4 * qn / q * std::pow(q, T(k));
        num *= fin;
        std::complex<T> den = qprod(std::complex<T>(qn * q), q, terms);
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) den *= qprod(a[i] * a[j] * qn, q, terms);
        }
        return (num / den).real();
      };
      return m;
    }
    case FamilyId::J: {
      const T g = real_param<T>(p, "g"), hh = real_param<T>(p, "h");
      m.lo = T(0);
      m.hi = pi / T(2);
      m.sample_lo = T(0);
      m.sample_hi = pi / T(2);
      m.eta = [](T x) { return std::cos(T(2) * x); };
      m.weight = [=](T x) { return std::pow(std::sin(x), T(2) * g) * std::pow(std::cos(x), T(2) * hh); };
      m.h = [=](int n) {
        return std::exp(std::lgamma(n + g + T(0.5)) + std::lgamma(n + hh + T(0.5)) - std::lgamma(T(n + 1)) -
                        std::lgamma(n + g + hh)) /
               (T(2) * (T(2 * n) + g + hh));
      };
      return m;
    }
    case FamilyId::L: {
      const T g = real_param<T>(p, "g");
      m.lo = T(0);
      m.hi = T(10) + T(2) * std::sqrt(g + T(8));
      m.sample_lo = T(0);
      m.sample_hi = T(4);
      m.eta = [](T x) { return x * x; };
      m.weight = [=](T x) { return std::pow(x, T(2) * g) * std::exp(-x * x); };
      m.h = [=](int n) { return std::exp(std::lgamma(n + g + T(0.5)) - std::lgamma(T(n + 1))) / T(2); };
      return m;
    }
    default:
      break;
  }
  throw NonPhysicalBinding(f.tag + " has no numeric weight model");
}

template <class T>
std::vector<T> eta_coeffs(const FamilyDescriptor& f, const ParamBinding& p, const LaurentPoly& poly) {
  return real_coeffs<T>(to_eta_basis(f, p, poly));
}

template <class T>
T horner(const std::vector<T>& c, T x) {
  T acc(0);
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

template <class T>
void poly_batch(const std::vector<T>& c, const std::vector<T>& xs, std::vector<T>& out) {
  out.resize(xs.size());
  if constexpr (std::is_same_v<T, double>) {
    horner_batch(c.data(), c.size(), xs.data(), out.data(), xs.size());
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = horner(c, xs[i]);
  }
}

template <class T>
T weighted_dot(const std::vector<T>& a, const std::vector<T>& b, const std::vector<T>& w) {
  if constexpr (std::is_same_v<T, double>) {
    return dot3(a.data(), b.data(), w.data(), a.size());
  } else {
    T acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i] * w[i];
    return acc;
  }
}

template <class T>
T composite_gauss(const std::vector<T>& cn, const std::vector<T>& cm, const Model<T>& md,
                  const std::function<T(T)>& weight, int panels) {
  using rule = boost::math::quadrature::gauss<T, 20>;
  const auto& abscissa = rule::abscissa();
  const auto& weights = rule::weights();
  std::vector<T> etas, ws;
  const T width = (md.hi - md.lo) / T(panels);
  for (int k = 0; k < panels; ++k) {
    const T mid = md.lo + (T(k) + T(0.5)) * width;
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
      for (int sgn : {-1, 1}) {
        const T x = mid + T(sgn) * abscissa[i] * width / T(2);
        etas.push_back(md.eta(x));
        ws.push_back(weights[i] * width / T(2) * weight(x));
      }
    }
  }
  std::vector<T> pn, pm;
  poly_batch(cn, etas, pn);
  poly_batch(cm, etas, pm);
  return weighted_dot(pn, pm, ws);
}

template <class T>
double inner_product_t(const FamilyDescriptor& f, const ParamBinding& p, int n, int m, const NumericConfig& cfg,
                       bool christoffel) {
  const Model<T> base = model<T>(f, p, cfg);
  ParamBinding poly_binding = p;
  std::function<T(T)> weight = base.weight;
  std::function<T(int)> h = base.h;
  if (christoffel) {
    poly_binding = christoffel_shift(f, p);
    const std::vector<T> phi = eta_coeffs<T>(f, p, assemble_phi(f, p));
    weight = [phi, base](T x) { return horner(phi, base.eta(x)) * base.weight(x); };
    h = model<T>(f, poly_binding, cfg).h;
  }
  const std::vector<T> cn = eta_coeffs<T>(f, poly_binding, f.build(poly_binding, n));
  const std::vector<T> cm = eta_coeffs<T>(f, poly_binding, f.build(poly_binding, m));
  const T scale = std::sqrt(h(n) * h(m));
  int panels = cfg.quad_points;
  T prev = composite_gauss(cn, cm, base, weight, panels);
  for (int iter = 0; iter < 10; ++iter) {
    panels *= 2;
    const T cur = composite_gauss(cn, cm, base, weight, panels);
    if (std::abs(cur - prev) <= T(cfg.tol_rel) * T(0.01) * scale) return static_cast<double>(cur);
    prev = cur;
  }
  throw QuadratureNonConvergence(f.tag + ": no convergence for (n, m) = (" + std::to_string(n) + ", " +
                                 std::to_string(m) + ") after " + std::to_string(panels) + " panels");
}

template <class T>
double ratio_residual_t(const FamilyDescriptor& f, const ParamBinding& p, const std::vector<double>& xs,
                        const NumericConfig& cfg) {
  const Model<T> base = model<T>(f, p, cfg);
  const Model<T> shifted = model<T>(f, christoffel_shift(f, p), cfg);
  const std::vector<T> phi = eta_coeffs<T>(f, p, assemble_phi(f, p));
  T worst(0);
  for (double xd : xs) {
    const T x = static_cast<T>(xd);
    const T want = horner(phi, base.eta(x));
    const T got = shifted.weight(x) / base.weight(x);
    worst = std::max(worst, std::abs(got - want) / std::abs(want));
  }
  return static_cast<double>(worst);
}

template <class T>
double norm_t(const FamilyDescriptor& f, const ParamBinding& p, int n, const NumericConfig& cfg) {
  return static_cast<double>(model<T>(f, p, cfg).h(n));
}

VerificationOutcome relative_outcome(const char* what, double got, double want, double scale, double tol) {
  const double err = std::abs(got - want) / scale;
  if (err <= tol) return VerificationOutcome::pass();
  return VerificationOutcome::fail(std::string(what) + ": " + std::to_string(got) + " vs " + std::to_string(want) +
                                   " (relative error " + std::to_string(err) + ")");
}

VerificationOutcome ortho_outcome(double got, double hn, double hm, bool diag, const NumericConfig& cfg) {
  if (diag) return relative_outcome("h_n", got, hn, std::abs(hn), cfg.tol_rel);
  return relative_outcome("off-diagonal", got, 0.0, std::sqrt(std::abs(hn * hm)), cfg.tol_rel);
}

}  // namespace

void validate(const NumericConfig& cfg) {
  if (cfg.qpoch_truncation < 50) throw ConfigError("numeric.qpoch_truncation must be at least 50");
  if (cfg.quad_points < 1) throw ConfigError("numeric.quad_points must be positive");
  if (!(cfg.tol_rel > 0.0 && cfg.tol_rel <= 1e-4)) throw ConfigError("numeric.tol_rel must lie in (0, 1e-4]");
}

bool numeric_supported(FamilyId id) {
  return id == FamilyId::MP || id == FamilyId::AW || id == FamilyId::J || id == FamilyId::L;
}

std::vector<ParamBinding> numeric_bindings(FamilyId id) {
  std::vector<ParamBinding> out;
  if (!numeric_supported(id)) return out;
  const FamilyDescriptor& f = family(id);
  if (id == FamilyId::MP) out.push_back(make_binding(id, {{"a", "1"}, {"phi", "m=1,n=1"}}));
  if (id == FamilyId::J) out.push_back(make_binding(id, {{"g", "1"}, {"h", "1"}}));
  for (const ParamBinding& p : f.default_bindings()) {
    if (f.physical(p)) out.push_back(p);
  }
  return out;
}

std::complex<double> lgamma_complex(std::complex<double> z) { return lanczos_lgamma(z); }
std::complex<long double> lgamma_complex(std::complex<long double> z) { return lanczos_lgamma(z); }

std::complex<double> qpoch_inf(std::complex<double> a, double q, int terms) { return qprod(a, q, terms); }

double ground_weight(const FamilyDescriptor& f, const ParamBinding& p, double x, const NumericConfig& cfg) {
  if (cfg.precision == Precision::Extended) return static_cast<double>(model<long double>(f, p, cfg).weight(x));
  return model<double>(f, p, cfg).weight(x);
}

double norm_h(const FamilyDescriptor& f, const ParamBinding& p, int n, const NumericConfig& cfg) {
  if (cfg.precision == Precision::Extended) return norm_t<long double>(f, p, n, cfg);
  return norm_t<double>(f, p, n, cfg);
}

std::vector<double> default_samples(const FamilyDescriptor& f, const ParamBinding& p, int count) {
  const Model<double> md = model<double>(f, p, NumericConfig{});
  std::vector<double> xs;
  for (int k = 0; k < count; ++k) {
    xs.push_back(md.sample_lo + (md.sample_hi - md.sample_lo) * (k + 0.5) / count);
  }
  return xs;
}

double weight_ratio_residual(const FamilyDescriptor& f, const ParamBinding& p, const std::vector<double>& xs,
                             const NumericConfig& cfg) {
  if (cfg.precision == Precision::Extended) return ratio_residual_t<long double>(f, p, xs, cfg);
  return ratio_residual_t<double>(f, p, xs, cfg);
}

VerificationOutcome weight_ratio_check(const FamilyDescriptor& f, const ParamBinding& p,
                                       const std::vector<double>& xs, const NumericConfig& cfg) {
  const double r = weight_ratio_residual(f, p, xs, cfg);
  if (r <= cfg.tol_rel) return VerificationOutcome::pass();
  return VerificationOutcome::fail("weight ratio relative residual " + std::to_string(r));
}

double inner_product(const FamilyDescriptor& f, const ParamBinding& p, int n, int m, const NumericConfig& cfg,
                     bool christoffel) {
  if (cfg.precision == Precision::Extended) return inner_product_t<long double>(f, p, n, m, cfg, christoffel);
  return inner_product_t<double>(f, p, n, m, cfg, christoffel);
}

VerificationOutcome orthogonality_check(const FamilyDescriptor& f, const ParamBinding& p, int n, int m,
                                        const NumericConfig& cfg) {
  const double got = inner_product(f, p, n, m, cfg);
  return ortho_outcome(got, norm_h(f, p, n, cfg), norm_h(f, p, m, cfg), n == m, cfg);
}

VerificationOutcome christoffel_orthogonality_check(const FamilyDescriptor& f, const ParamBinding& p, int n,
                                                    int m, const NumericConfig& cfg) {
  const double got = inner_product(f, p, n, m, cfg, true);
  const ParamBinding ps = christoffel_shift(f, p);
  return ortho_outcome(got, norm_h(f, ps, n, cfg), norm_h(f, ps, m, cfg), n == m, cfg);
}

}  // namespace askey::numeric
