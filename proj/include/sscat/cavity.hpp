#pragma once

#include <optional>
#include <vector>

#include "sscat/wavefield.hpp"

// Finite-difference model of the half-infinite cavity (hard wall at x = 0,
// i*gamma*delta at x = a) and its Crank-Nicolson time evolution.

namespace sscat {

struct lattice_model {
    int n_sites = 0;
    double dx = 0.0;
    double kappa = 0.0; // 1/(2 dx^2), continuum calibration
    int gain_site = 0;  // 1-based site index nearest to x = a
    double gamma = 0.0;
    double a = 0.0;
    double length = 0.0; // truncation length L

    double site_x(int j) const { return dx * j; } // j = 1..n_sites, wall at 0
    // fastest lattice group velocity; emitted waves must not reach the
    // right edge, so runs are limited to t < (L - a)/v_max
    double v_max() const { return 2.0 * kappa * dx; }
    double guard_time() const { return (length - a) / v_max(); }
};

struct simulation_state {
    std::vector<cplx> amplitudes; // site 1..n_sites
    double t = 0.0;
    double norm = 0.0; // dx * sum |psi|^2

    void refresh_norm(double dx);
};

struct fidelity_trace {
    std::vector<double> times;
    std::vector<cplx> values;
    double k = 0.0;
};

// Tridiagonal H: hopping -kappa, on-site 2*kappa, plus i*gamma/dx at the
// gain site. Refuses k_c*dx >= 0.2 (resolution guard).
lattice_model build_lattice(double gamma, double a, double length, double dx);

// Initial profile of Eq.-type sinusoidal shape, sampled on the grid and
// renormalized to unit discrete L2 norm.
simulation_state sample_initial_state(const lattice_model& model);

// samples any piecewise wave on the model grid (no normalization)
std::vector<cplx> sample_wave(const lattice_model& model,
                              const piecewise_wave& wave);

// Crank-Nicolson: (1 + i dt/2 H) psi' = (1 - i dt/2 H) psi, one tridiagonal
// solve per step. Norm-conserving for gamma = 0.
void evolve(const lattice_model& model, simulation_state& state, double dt,
            long steps);

// F(k,t) = [dx sum conj(Psi) psi^k] / [dx sum |Psi|^2] with psi^k the
// stationary cavity solution sampled on the grid.
cplx fidelity(const lattice_model& model, const simulation_state& state,
              double k);
cplx fidelity_against(const lattice_model& model,
                      const simulation_state& state,
                      const std::vector<cplx>& target);

// earliest t with max-min of |F| below epsilon over [t, t + window];
// nullopt when no plateau exists in the trace
std::optional<double> relaxation_time(const fidelity_trace& trace,
                                      double window, double epsilon);

struct spectrum_point {
    double k = 0.0;
    double abs_f = 0.0;
};

std::vector<spectrum_point> k_spectrum(const lattice_model& model,
                                       const simulation_state& state,
                                       std::span<const double> k_grid);

double spectrum_peak(std::span<const spectrum_point> spec);
// linear-interpolated full width at half maximum around the peak
double spectrum_fwhm(std::span<const spectrum_point> spec);

} // namespace sscat
