#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "askey/christoffel.hpp"
#include "askey/errors.hpp"
#include "askey/family/family.hpp"
#include "askey/numeric/kernels.hpp"
#include "askey/numeric/numeric.hpp"

using namespace askey;
using namespace askey::numeric;

namespace {

ParamBinding mp_unit() { return make_binding(FamilyId::MP, {{"a", "1"}, {"w", "i"}}); }
ParamBinding jacobi_11() { return make_binding(FamilyId::J, {{"g", "1"}, {"h", "1"}}); }

}  // namespace

TEST_CASE("complex log gamma") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.25, 30.0}) {
    CHECK(lgamma_complex(std::complex<double>(x, 0)).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    CHECK(lgamma_complex(std::complex<long double>(x, 0)).real() ==
          doctest::Approx(static_cast<double>(std::lgamma(static_cast<long double>(x)))).epsilon(1e-13));
  }
  // Gamma(z + 1) = z Gamma(z)
  for (auto z : {std::complex<double>(1, 2), std::complex<double>(0.3, -4), std::complex<double>(-2.5, 0.7)}) {
    const std::complex<double> d = lgamma_complex(z + 1.0) - lgamma_complex(z) - std::log(z);
    CHECK(std::abs(d.real()) < 1e-12);
    CHECK(std::abs(std::remainder(d.imag(), 2 * std::numbers::pi)) < 1e-12);
  }
  const double r = std::exp(2 * (lgamma_complex(std::complex<double>(2, 2)).real() - lgamma_complex(std::complex<double>(1, 2)).real()));
  CHECK(r == doctest::Approx(5).epsilon(1e-13));
  CHECK(std::abs(qpoch_inf({0.5, 0}, 0.25, 200) - qpoch_inf({0.5, 0}, 0.25, 60)) < 1e-15);
  CHECK(std::abs(qpoch_inf({0.5, 0}, 0.25, 2) - 0.5 * 0.875) < 1e-15);
}

TEST_CASE("weight ratios") {
  const NumericConfig cfg;
  const ParamBinding mp = mp_unit();
  const auto& f = family(FamilyId::MP);
  const double ratio = ground_weight(f, christoffel_shift(f, mp), 2.0, cfg) / ground_weight(f, mp, 2.0, cfg);
  CHECK(ratio == doctest::Approx(5).epsilon(1e-12));
  CHECK(weight_ratio_check(f, mp, {2.0}, cfg).passed());

  const auto& l = family(FamilyId::L);
  const ParamBinding lp = make_binding(FamilyId::L, {{"g", "1"}});
  const double lr = ground_weight(l, christoffel_shift(l, lp), 2.0, cfg) / ground_weight(l, lp, 2.0, cfg);
  CHECK(lr == doctest::Approx(4).epsilon(1e-12));

  for (FamilyId id : {FamilyId::MP, FamilyId::AW, FamilyId::J, FamilyId::L}) {
    for (const auto& p : numeric_bindings(id)) {
      const auto& g = family(id);
      const auto xs = default_samples(g, p);
      CHECK(xs.size() == 7);
      CHECK_MESSAGE(weight_ratio_residual(g, p, xs, cfg) < 1e-10, g.tag);
      NumericConfig ext = cfg;
      ext.precision = Precision::Extended;
      CHECK_MESSAGE(weight_ratio_residual(g, p, xs, ext) < 1e-10, g.tag);
    }
  }

  const auto& aw = family(FamilyId::AW);
  const ParamBinding slow = make_binding(FamilyId::AW, {{"a1", "1/2"}, {"a2", "1/3"}, {"a3", "-1/5"}, {"a4", "1/7"},
                                                        {"s", "2/3"}});
  NumericConfig coarse = cfg;
  coarse.qpoch_truncation = 4;
  const auto xs = default_samples(aw, slow);
  CHECK(weight_ratio_residual(aw, slow, xs, coarse) >= weight_ratio_residual(aw, slow, xs, cfg));
  CHECK(weight_ratio_residual(aw, slow, xs, coarse) > 1e-6);

  const ParamBinding outside = make_binding(FamilyId::AW, {{"a1", "2"}, {"a2", "1/3"}, {"a3", "-1/5"}, {"a4", "1/7"},
                                                           {"s", "1/2"}});
  CHECK_THROWS_AS(weight_ratio_check(aw, outside, {1.0}, cfg), NonPhysicalBinding);
  CHECK_FALSE(numeric_supported(FamilyId::cH));
  CHECK(numeric_supported(FamilyId::AW));
}

TEST_CASE("norms") {
  const NumericConfig cfg;
  const auto& j = family(FamilyId::J);
  CHECK(norm_h(j, jacobi_11(), 0, cfg) == doctest::Approx(std::numbers::pi / 16).epsilon(1e-12));
  CHECK(inner_product(j, jacobi_11(), 0, 0, cfg) == doctest::Approx(std::numbers::pi / 16).epsilon(1e-8));
  const auto& mp = family(FamilyId::MP);
  CHECK(norm_h(mp, mp_unit(), 0, cfg) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
  CHECK(inner_product(mp, mp_unit(), 0, 0, cfg) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-8));
}

TEST_CASE("Gram matrices") {
  const NumericConfig cfg;
  for (FamilyId id : {FamilyId::MP, FamilyId::AW, FamilyId::J, FamilyId::L}) {
    const auto& f = family(id);
    const ParamBinding p = numeric_bindings(id).front();
    for (int n = 0; n <= 4; ++n) {
      for (int m = 0; m <= n; ++m) {
        CHECK_MESSAGE(orthogonality_check(f, p, n, m, cfg).passed(), f.tag << " " << n << "," << m);
        if (n <= 3) CHECK_MESSAGE(christoffel_orthogonality_check(f, p, n, m, cfg).passed(), f.tag);
      }
    }
  }
  NumericConfig tight;
  tight.quad_points = 1;
  tight.tol_rel = 1e-30;
  CHECK_THROWS_AS(inner_product(family(FamilyId::L), numeric_bindings(FamilyId::L).front(), 4, 2, tight),
                  QuadratureNonConvergence);
}

TEST_CASE("config validation") {
  NumericConfig c;
  CHECK_NOTHROW(validate(c));
  c.qpoch_truncation = 49;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = NumericConfig{};
  c.tol_rel = 1e-3;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.tol_rel = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = NumericConfig{};
  c.quad_points = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("SIMD kernels agree with the scalar reference") {
  const char* env = std::getenv("ASKEY_SIMD");
  if (env != nullptr && std::string(env) == "scalar") {
    CHECK(active_isa() == KernelIsa::Scalar);
  } else {
    CHECK(active_isa() == (avx2_available() ? KernelIsa::Avx2 : KernelIsa::Scalar));
  }
  CHECK(std::string(isa_name(KernelIsa::Scalar)) == "scalar");

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 64u, 257u}) {
    for (std::size_t len : {0u, 1u, 2u, 9u}) {
      std::vector<double> c(len), xs(n), a(n), b(n);
      for (auto& v : c) v = u(rng);
      for (auto& v : xs) v = u(rng);
      scalar::horner_batch(c.data(), len, xs.data(), a.data(), n);
      horner_batch(c.data(), len, xs.data(), b.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        double direct = 0, pw = 1;
        for (std::size_t k = 0; k < len; ++k, pw *= xs[i]) direct += c[k] * pw;
        CHECK(a[i] == doctest::Approx(direct).epsilon(1e-12));
        CHECK(std::abs(a[i] - b[i]) <= 1e-13 * (1 + std::abs(a[i])));
      }
      if (avx2_available()) {
        avx2::horner_batch(c.data(), len, xs.data(), b.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-13 * (1 + std::abs(a[i])));
      }
    }
    std::vector<double> x(n), y(n), w(n);
    double ref = 0, mag = 0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = u(rng);
      y[i] = u(rng);
      w[i] = u(rng);
      ref += x[i] * y[i] * w[i];
      mag += std::abs(x[i] * y[i] * w[i]);
    }
    CHECK(std::abs(scalar::dot3(x.data(), y.data(), w.data(), n) - ref) <= 1e-14 * (1 + mag));
    CHECK(std::abs(dot3(x.data(), y.data(), w.data(), n) - ref) <= 1e-14 * (1 + mag));
    if (avx2_available()) CHECK(std::abs(avx2::dot3(x.data(), y.data(), w.data(), n) - ref) <= 1e-14 * (1 + mag));
  }
}
