#include "sscat/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace sscat::kernels {

namespace scalar {

cplx cdotc(const cplx* a, const cplx* b, std::size_t n) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
        acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm_sq(const cplx* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += std::norm(a[i]);
    return acc;
}

void tridiag_apply(const cplx* d, cplx h, const cplx* psi, cplx* out,
                   std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        cplx nb{0.0, 0.0};
        if (i > 0) nb += psi[i - 1];
        if (i + 1 < n) nb += psi[i + 1];
        out[i] = d[i] * psi[i] + h * nb;
    }
}

} // namespace scalar

namespace {

enum class level { scalar_only, avx2 };

level detect() {
    if (const char* env = std::getenv("SSCAT_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return level::scalar_only;
#if defined(__x86_64__)
        if (std::strcmp(env, "avx2") == 0) return level::avx2;
#endif
    }
#if defined(__x86_64__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return level::avx2;
#endif
    return level::scalar_only;
}

const level g_level = detect();

} // namespace

std::string_view active_level() {
    return g_level == level::scalar_only ? "scalar" : "avx2";
}

cplx cdotc(const cplx* a, const cplx* b, std::size_t n) {
#if defined(__x86_64__)
    if (g_level == level::avx2) return avx2::cdotc(a, b, n);
#endif
    return scalar::cdotc(a, b, n);
}

double norm_sq(const cplx* a, std::size_t n) {
#if defined(__x86_64__)
    if (g_level == level::avx2) return avx2::norm_sq(a, n);
#endif
    return scalar::norm_sq(a, n);
}

void tridiag_apply(const cplx* d, cplx h, const cplx* psi, cplx* out,
                   std::size_t n) {
#if defined(__x86_64__)
    if (g_level == level::avx2) return avx2::tridiag_apply(d, h, psi, out, n);
#endif
    scalar::tridiag_apply(d, h, psi, out, n);
}

} // namespace sscat::kernels
