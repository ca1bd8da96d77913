#include "askey/numeric/kernels.hpp"

#include <immintrin.h>

#include <cstdlib>
#include <cstring>

namespace askey::numeric {

namespace scalar {

void horner_batch(const double* c, std::size_t len, const double* xs, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = len; k-- > 0;) acc = acc * xs[i] + c[k];
    out[i] = acc;
  }
}

double dot3(const double* a, const double* b, const double* w, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i] * w[i];
  return acc;
}

}  // namespace scalar

namespace avx2 {

__attribute__((target("avx2,fma"))) void horner_batch(const double* c, std::size_t len, const double* xs,
                                                       double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = len; k-- > 0;) acc = _mm256_fmadd_pd(acc, x, _mm256_set1_pd(c[k]));
    _mm256_storeu_pd(out + i, acc);
  }
  scalar::horner_batch(c, len, xs + i, out + i, n - i);
}

__attribute__((target("avx2,fma"))) double dot3(const double* a, const double* b, const double* w, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(ab, _mm256_loadu_pd(w + i), acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]) + scalar::dot3(a + i, b + i, w + i, n - i);
}

}  // namespace avx2

namespace {

KernelIsa detect() {
  const char* env = std::getenv("ASKEY_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return KernelIsa::Scalar;
  return avx2_available() ? KernelIsa::Avx2 : KernelIsa::Scalar;
}

struct Table {
  void (*horner)(const double*, std::size_t, const double*, double*, std::size_t);
  double (*dot)(const double*, const double*, const double*, std::size_t);
};

const Table& table() {
  static const Table t = detect() == KernelIsa::Avx2 ? Table{avx2::horner_batch, avx2::dot3}
                                                     : Table{scalar::horner_batch, scalar::dot3};
  return t;
}

}  // namespace

bool avx2_available() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

KernelIsa active_isa() {
  static const KernelIsa isa = detect();
  return isa;
}

const char* isa_name(KernelIsa isa) { return isa == KernelIsa::Avx2 ? "avx2" : "scalar"; }

void horner_batch(const double* c, std::size_t len, const double* xs, double* out, std::size_t n) {
  table().horner(c, len, xs, out, n);
}

double dot3(const double* a, const double* b, const double* w, std::size_t n) { return table().dot(a, b, w, n); }

}  // namespace askey::numeric
