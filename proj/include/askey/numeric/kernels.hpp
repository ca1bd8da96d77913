#pragma once

#include <cstddef>

namespace askey::numeric {

enum class KernelIsa { Scalar, Avx2 };

/// out[i] = sum_k c[k] xs[i]^k for a polynomial of length len.
void horner_batch(const double* c, std::size_t len, const double* xs, double* out, std::size_t n);
/// sum_i a[i] b[i] w[i]
double dot3(const double* a, const double* b, const double* w, std::size_t n);

/// The variant picked at startup: AVX2+FMA when the CPU has it, unless
/// ASKEY_SIMD=scalar is set in the environment.
KernelIsa active_isa();
const char* isa_name(KernelIsa isa);
bool avx2_available();

namespace scalar {
void horner_batch(const double* c, std::size_t len, const double* xs, double* out, std::size_t n);
double dot3(const double* a, const double* b, const double* w, std::size_t n);
}  // namespace scalar

namespace avx2 {
void horner_batch(const double* c, std::size_t len, const double* xs, double* out, std::size_t n);
double dot3(const double* a, const double* b, const double* w, std::size_t n);
}  // namespace avx2

}  // namespace askey::numeric
