#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sscat/errors.hpp"

// Transfer-matrix algebra for 1D scattering off delta potentials (continuous
// line) and on-site potentials (tight-binding chain). Units: hbar = m = 1,
// H = -d^2/(2 dx^2) + V on the line; E = -2*kappa*cos(k) on the chain.

namespace sscat {

using cplx = std::complex<double>;

inline constexpr double kDetTolerance = 1e-12;
inline constexpr double kWavenumberTolerance = 1e-12;

enum class center_kind { continuous_delta, hard_wall, lattice_site };

struct scattering_center {
    center_kind kind;
    double position; // continuous coordinate, or lattice index as a double
    cplx strength;   // coefficient of delta(x-x0) / the on-site energy

    static scattering_center continuous_delta(double x, cplx s) {
        return {center_kind::continuous_delta, x, s};
    }
    // imaginary delta i*V*delta(x-x0), the paper's gain center
    static scattering_center imaginary_delta(double x, double v) {
        return {center_kind::continuous_delta, x, cplx{0.0, v}};
    }
    static scattering_center hard_wall(double x) {
        return {center_kind::hard_wall, x, cplx{0.0, 0.0}};
    }
    static scattering_center lattice_site(long j, cplx s) {
        return {center_kind::lattice_site, static_cast<double>(j), s};
    }
};

struct scattering_amplitudes {
    cplx r_left;
    cplx r_right;
    cplx t_left;
    cplx t_right;
    double k;
};

struct transfer_matrix {
    cplx m11, m12, m21, m22;
    double k;

    static transfer_matrix identity(double k) {
        return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, k};
    }
    cplx det() const { return m11 * m22 - m12 * m21; }
};

// Amplitudes of a single imaginary delta i*V*delta(x) at the origin:
// r = V/(k-V), t = k/(k-V), identical from both sides.
scattering_amplitudes delta_amplitudes(double v, double k);

// General complex-strength delta s*delta(x): r = s/(ik-s), t = ik/(ik-s).
scattering_amplitudes delta_amplitudes_complex(cplx s, double k);

// On-site potential V|j><j| in a chain with hopping -kappa:
// r = -iV/(2 kappa sin k + iV), t = 2 kappa sin k/(2 kappa sin k + iV).
scattering_amplitudes lattice_amplitudes(cplx v, double kappa, double k);

// Transfer matrix of a single center at its own position. Hard walls are
// rejected (no finite transmission); kappa is used for lattice sites only.
transfer_matrix center_matrix(const scattering_center& c, double k,
                              double kappa = 1.0);

// M = outer * inner, outer being the rightmost center. k must agree.
transfer_matrix compose(const transfer_matrix& outer,
                        const transfer_matrix& inner);

// Product over all centers (rightmost leftmost in the product order);
// positions must be strictly increasing, no hard walls.
transfer_matrix composite_matrix(std::span<const scattering_center> centers,
                                 double k, double kappa = 1.0);

// M22 entry of the composite; its zeros on the real k axis are the SSs.
cplx composite_m22(std::span<const scattering_center> centers, double k,
                   double kappa = 1.0);

// Wronskian of the unit-normalized Jost solutions, fixed to -2ik * M22 on
// the line (-2i sin(k) * M22 on the chain) by the free-space limit.
cplx jost_wronskian(std::span<const scattering_center> centers, double k,
                    double kappa = 1.0);

// Composite amplitudes recovered from the matrix entries:
// t_R = 1/M22, r_R = M12/M22, r_L = -M21/M22, t_L = det(M)/M22.
scattering_amplitudes amplitudes_from_matrix(const transfer_matrix& m);

} // namespace sscat
