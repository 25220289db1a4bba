#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

// Data-parallel inner loops of the lattice simulation: complex reductions
// and the Crank-Nicolson right-hand-side stencil. Scalar reference kernels
// plus AVX2 variants, selected once at startup (override with SSCAT_SIMD=
// scalar|avx2).

namespace sscat::kernels {

using cplx = std::complex<double>;

// sum_i conj(a_i) * b_i
cplx cdotc(const cplx* a, const cplx* b, std::size_t n);

// sum_i |a_i|^2
double norm_sq(const cplx* a, std::size_t n);

// out_i = d_i * psi_i + h * (psi_{i-1} + psi_{i+1}), open ends (psi_{-1} =
// psi_{n} = 0). Aliasing of out and psi is not allowed.
void tridiag_apply(const cplx* d, cplx h, const cplx* psi, cplx* out,
                   std::size_t n);

std::string_view active_level(); // "scalar" or "avx2"

namespace scalar {
cplx cdotc(const cplx* a, const cplx* b, std::size_t n);
double norm_sq(const cplx* a, std::size_t n);
void tridiag_apply(const cplx* d, cplx h, const cplx* psi, cplx* out,
                   std::size_t n);
} // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
cplx cdotc(const cplx* a, const cplx* b, std::size_t n);
double norm_sq(const cplx* a, std::size_t n);
void tridiag_apply(const cplx* d, cplx h, const cplx* psi, cplx* out,
                   std::size_t n);
} // namespace avx2
#endif

} // namespace sscat::kernels
