#pragma once

#include <limits>
#include <ostream>
#include <vector>

#include "sscat/scatter.hpp"

// Piecewise-analytic eigenfunctions: each region carries coefficients of
// e^{ikx} and e^{-ikx}, so second derivatives and overlaps are exact.

namespace sscat {

struct wave_region {
    double x_lo;
    double x_hi; // +inf for the outermost region
    cplx c_plus;  // coefficient of e^{ikx}
    cplx c_minus; // coefficient of e^{-ikx}
};

struct piecewise_wave {
    std::vector<wave_region> regions; // ordered, contiguous
    double k = 0.0;

    double x_min() const { return regions.front().x_lo; }
    double x_max() const { return regions.back().x_hi; }
};

inline constexpr double kWaveInf = std::numeric_limits<double>::infinity();

cplx evaluate(const piecewise_wave& wave, double x);
cplx evaluate_derivative(const piecewise_wave& wave, double x);

// The coalesced SS solution of the two-delta system: e^{-ik_c x} on the
// left, cos + i (V1-V2)/(V1+V2) sin between the deltas, e^{ik_c x} on the
// right, in coordinates measured from x1. Requires (V1+V2)(x2-x1) = m*pi.
piecewise_wave two_delta_ss_wave(double v1, double v2, double x1, double x2);

// Scattering solution of the half-infinite cavity (wall at 0, i*gamma*delta
// at a): sin(kx) inside, sin(kx) + (2i gamma/k) sin(k(x-a)) sin(ka) outside.
piecewise_wave cavity_wave(double k, double gamma, double a);

// Normalized sinusoidal profile e^{ik_c x} - e^{-ik_c x} on (0,a), zero
// beyond; unit L2 norm.
piecewise_wave initial_cavity_state(double k_c, double a);

// residual diagnostics for the substitution checker
double continuity_residual(const piecewise_wave& wave);
// max over the given deltas of |psi'(x0+) - psi'(x0-) - 2*s*psi(x0)|
// (s is the full complex delta strength; i*gamma for gain centers)
double jump_residual(const piecewise_wave& wave,
                     std::span<const scattering_center> deltas);

// exact integral of conj(a)*b over [lo, hi]; both waves at any k
cplx overlap(const piecewise_wave& a, const piecewise_wave& b, double lo,
             double hi);
double norm_sq_window(const piecewise_wave& a, double lo, double hi);

// columns x, Re psi, Im psi, |psi|^2, 17 significant digits
void write_csv(std::ostream& os, const piecewise_wave& wave, double lo,
               double hi, int points);

} // namespace sscat
