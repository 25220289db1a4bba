#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sscat/scatter.hpp"

// Locating spectral singularities (zeros of M22 on the real k axis) and
// inverting the closed-form SS conditions.

namespace sscat {

struct ss_query {
    std::vector<scattering_center> centers;
    double k_min = 0.0;
    double k_max = 0.0;
    int grid_points = 2001;
    double tolerance = 1e-10;
    double kappa = 1.0; // lattice scenes only
};

struct ss_result {
    double k_c = 0.0;
    double residual = 0.0; // |m22(k_c)|
    int multiplicity_hint = 1;
};

struct ss_scan {
    std::vector<ss_result> singularities;
    std::vector<std::string> warnings; // skipped amplitude poles etc.
};

// r_R^A * r_L^B * exp(2ik * separation) - 1; zero iff the matching
// condition for an SS holds.
cplx matching_residual(cplx r_right_a, cplx r_left_b, double separation,
                       double k);

// |m22| minimization over [k_min, k_max]: uniform scan, golden-section
// refinement of bracketed minima, accept below tolerance. A hard wall is
// allowed only as the leftmost center; it replaces m22 by the outgoing-wave
// matching determinant M21 - M22 e^{2ikw}.
ss_scan find_ss(const ss_query& query);

struct two_delta_design {
    double v1 = 0.0;
    double v2 = 0.0;
    double spacing = 0.0;
};

// k_c = V1 + V2, k_c * spacing = m * pi
two_delta_design design_two_delta(double k_c, double split, int m);

struct lattice_pair_design {
    double gamma = 0.0; // imaginary strength, site j1
    double v = 0.0;     // real strength, site j1 + a
};

// gamma = 2 kappa sin k_c / (1 - cos 2 k_c a), V = -2 kappa sin k_c / tan 2 k_c a
lattice_pair_design design_lattice_pair(double k_c, long a, double kappa);

struct cavity_design {
    double k_c = 0.0;
    double a = 0.0;
};

// k_c = 2 gamma, k_c * a = (n + 1/2) * pi
cavity_design design_cavity(double gamma, int n);

// residual of the half-infinite cavity (wall at 0, i*gamma*delta at a)
// outgoing-wave condition; used by find_ss for wall scenes.
cplx wall_residual(std::span<const scattering_center> centers, double k,
                   double kappa = 1.0);

} // namespace sscat
