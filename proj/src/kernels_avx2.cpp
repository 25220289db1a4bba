#include "sscat/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace sscat::kernels::avx2 {

namespace {

// complex product of the two packed complex doubles in p and q
inline __m256d cmul(__m256d p, __m256d q) {
    __m256d pre = _mm256_movedup_pd(p);        // (pr0 pr0 pr1 pr1)
    __m256d pim = _mm256_permute_pd(p, 0xF);   // (pi0 pi0 pi1 pi1)
    __m256d qsw = _mm256_permute_pd(q, 0x5);   // (qi0 qr0 qi1 qr1)
    return _mm256_fmaddsub_pd(pre, q, _mm256_mul_pd(pim, qsw));
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

} // namespace

cplx cdotc(const cplx* a, const cplx* b, std::size_t n) {
    const double* ap = reinterpret_cast<const double*>(a);
    const double* bp = reinterpret_cast<const double*>(b);
    __m256d acc_prod = _mm256_setzero_pd(); // ar*br, ai*bi lanes
    __m256d acc_cross = _mm256_setzero_pd(); // ar*bi, ai*br lanes
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(ap + 2 * i);
        __m256d vb = _mm256_loadu_pd(bp + 2 * i);
        acc_prod = _mm256_fmadd_pd(va, vb, acc_prod);
        acc_cross = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), acc_cross);
    }
    // re = sum of all acc_prod lanes; im = even minus odd lanes of acc_cross
    const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    double re = hsum(acc_prod);
    double im = hsum(_mm256_mul_pd(acc_cross, sign));
    for (; i < n; ++i) {
        cplx c = std::conj(a[i]) * b[i];
        re += c.real();
        im += c.imag();
    }
    return {re, im};
}

double norm_sq(const cplx* a, std::size_t n) {
    const double* ap = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(ap + 2 * i);
        acc = _mm256_fmadd_pd(va, va, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i)
        s += std::norm(a[i]);
    return s;
}

void tridiag_apply(const cplx* d, cplx h, const cplx* psi, cplx* out,
                   std::size_t n) {
    if (n == 0) return;
    if (n == 1) {
        out[0] = d[0] * psi[0];
        return;
    }
    out[0] = d[0] * psi[0] + h * psi[1];
    const double* dp = reinterpret_cast<const double*>(d);
    const double* pp = reinterpret_cast<const double*>(psi);
    double* op = reinterpret_cast<double*>(out);
    const __m256d vh = _mm256_setr_pd(h.real(), h.imag(), h.real(), h.imag());
    std::size_t i = 1;
    for (; i + 2 <= n - 1; i += 2) {
        __m256d vd = _mm256_loadu_pd(dp + 2 * i);
        __m256d vp = _mm256_loadu_pd(pp + 2 * i);
        __m256d left = _mm256_loadu_pd(pp + 2 * (i - 1));
        __m256d right = _mm256_loadu_pd(pp + 2 * (i + 1));
        __m256d res = _mm256_add_pd(cmul(vd, vp),
                                    cmul(vh, _mm256_add_pd(left, right)));
        _mm256_storeu_pd(op + 2 * i, res);
    }
    for (; i < n - 1; ++i)
        out[i] = d[i] * psi[i] + h * (psi[i - 1] + psi[i + 1]);
    out[n - 1] = d[n - 1] * psi[n - 1] + h * psi[n - 2];
}

} // namespace sscat::kernels::avx2

#endif // __x86_64__
