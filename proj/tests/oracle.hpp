#pragma once

// Independent oracles for the transfer-matrix path: direct linear solves of
// the piecewise matching conditions, continuous and lattice. Test-only.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "sscat/scatter.hpp"

namespace sscat::oracle {

struct oracle_amplitudes {
    cplx r_left, r_right, t_left, t_right;
};

// n deltas s_l * delta(x - x_l) on the line: solve continuity and the
// derivative jump psi'(x+) - psi'(x-) = 2 s psi(x) region by region.
inline oracle_amplitudes continuous_solve(
    const std::vector<scattering_center>& deltas, double k) {
    const int n = static_cast<int>(deltas.size());
    const cplx I{0.0, 1.0};

    // unknowns: (A_i, B_i) per region, i = 0..n; two incidence constraints
    auto solve = [&](bool left_incident) {
        const int dim = 2 * (n + 1);
        Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dim);
        int row = 0;
        for (int l = 0; l < n; ++l) {
            double x = deltas[l].position;
            cplx ep = std::exp(I * k * x), em = std::exp(-I * k * x);
            int li = 2 * l, ri = 2 * (l + 1);
            // continuity
            mat(row, li) = ep;
            mat(row, li + 1) = em;
            mat(row, ri) = -ep;
            mat(row, ri + 1) = -em;
            ++row;
            // jump: ik(A_r ep - B_r em) - ik(A_l ep - B_l em) = 2 s psi
            cplx s = deltas[l].strength;
            mat(row, ri) = I * k * ep - 2.0 * s * ep;
            mat(row, ri + 1) = -I * k * em - 2.0 * s * em;
            mat(row, li) = -I * k * ep;
            mat(row, li + 1) = I * k * em;
            ++row;
        }
        if (left_incident) {
            mat(row, 0) = 1.0; rhs(row) = 1.0; ++row;   // A_0 = 1
            mat(row, 2 * n + 1) = 1.0; ++row;           // B_n = 0
        } else {
            mat(row, 2 * n + 1) = 1.0; rhs(row) = 1.0; ++row; // B_n = 1
            mat(row, 0) = 1.0; ++row;                         // A_0 = 0
        }
        return Eigen::VectorXcd{mat.fullPivLu().solve(rhs)};
    };

    auto left = solve(true);
    auto right = solve(false);
    oracle_amplitudes amp;
    amp.r_left = left(1);           // B_0 of the left-incident solution
    amp.t_left = left(2 * n);       // A_n
    amp.r_right = right(2 * n);     // A_n of the right-incident solution
    amp.t_right = right(1);         // B_0
    return amp;
}

// On-site potentials V_l |j_l><j_l| in a chain with hopping -kappa,
// E = -2 kappa cos k. Bethe-ansatz regions joined at the impurity sites.
inline oracle_amplitudes lattice_solve(
    const std::vector<scattering_center>& sites, double kappa, double k) {
    const int n = static_cast<int>(sites.size());
    const cplx I{0.0, 1.0};
    const double e_k = -2.0 * kappa * std::cos(k);

    auto solve = [&](bool left_incident) {
        const int dim = 2 * (n + 1);
        Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dim);
        auto wave = [&](double j, int col_base, cplx scale, int row) {
            mat(row, col_base) += scale * std::exp(I * k * j);
            mat(row, col_base + 1) += scale * std::exp(-I * k * j);
        };
        int row = 0;
        for (int l = 0; l < n; ++l) {
            double j = sites[l].position;
            int li = 2 * l, ri = 2 * (l + 1);
            // both regions give the same value at the impurity site
            wave(j, li, 1.0, row);
            wave(j, ri, -1.0, row);
            ++row;
            // -kappa(psi(j-1) + psi(j+1)) + V psi(j) = E psi(j)
            cplx v = sites[l].strength;
            wave(j - 1.0, li, -kappa, row);
            wave(j + 1.0, ri, -kappa, row);
            wave(j, li, v - e_k, row);
            ++row;
        }
        if (left_incident) {
            mat(row, 0) = 1.0; rhs(row) = 1.0; ++row;
            mat(row, 2 * n + 1) = 1.0; ++row;
        } else {
            mat(row, 2 * n + 1) = 1.0; rhs(row) = 1.0; ++row;
            mat(row, 0) = 1.0; ++row;
        }
        return Eigen::VectorXcd{mat.fullPivLu().solve(rhs)};
    };

    auto left = solve(true);
    auto right = solve(false);
    oracle_amplitudes amp;
    amp.r_left = left(1);
    amp.t_left = left(2 * n);
    amp.r_right = right(2 * n);
    amp.t_right = right(1);
    return amp;
}

// m22 = 1/t_L for these reciprocal composites (det M = 1)
inline cplx m22_from(const oracle_amplitudes& amp) { return 1.0 / amp.t_left; }

} // namespace sscat::oracle
