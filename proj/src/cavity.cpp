#include "sscat/cavity.hpp"

#include <cmath>

#include "sscat/kernels.hpp"

namespace sscat {

namespace {

constexpr cplx kI{0.0, 1.0};

// Thomas factorization of (1 + i dt/2 H). H is fixed during a run, so the
// forward-elimination multipliers are computed once.
struct cn_solver {
    std::vector<cplx> diag_plus;  // 1 + c*d_j
    std::vector<cplx> diag_minus; // 1 - c*d_j
    cplx off_plus;                // c*(-kappa)
    cplx off_minus;               // -c*(-kappa)
    std::vector<cplx> denom_inv;  // 1 / (diag_plus - off^2 * prev)
    std::vector<cplx> upper_ratio;

    cn_solver(const lattice_model& m, double dt) {
        const int n = m.n_sites;
        cplx c = kI * (0.5 * dt);
        diag_plus.resize(n);
        diag_minus.resize(n);
        for (int j = 0; j < n; ++j) {
            cplx d = 2.0 * m.kappa;
            if (j + 1 == m.gain_site) d += kI * (m.gamma / m.dx);
            diag_plus[j] = 1.0 + c * d;
            diag_minus[j] = 1.0 - c * d;
        }
        off_plus = -c * m.kappa;
        off_minus = c * m.kappa;

        denom_inv.resize(n);
        upper_ratio.resize(n);
        cplx prev_ratio{0.0, 0.0};
        for (int j = 0; j < n; ++j) {
            cplx denom = diag_plus[j] - off_plus * prev_ratio;
            if (std::abs(denom) < 1e-300)
                throw integrator_error("Crank-Nicolson tridiagonal factor is singular at site " +
                                       std::to_string(j + 1));
            denom_inv[j] = 1.0 / denom;
            upper_ratio[j] = off_plus * denom_inv[j];
            prev_ratio = upper_ratio[j];
        }
    }

    void step(std::vector<cplx>& psi, std::vector<cplx>& rhs) const {
        const std::size_t n = psi.size();
        kernels::tridiag_apply(diag_minus.data(), off_minus, psi.data(),
                               rhs.data(), n);
        // forward sweep
        rhs[0] *= denom_inv[0];
        for (std::size_t j = 1; j < n; ++j)
            rhs[j] = (rhs[j] - off_plus * rhs[j - 1]) * denom_inv[j];
        // back substitution
        psi[n - 1] = rhs[n - 1];
        for (std::size_t j = n - 1; j-- > 0;)
            psi[j] = rhs[j] - upper_ratio[j] * psi[j + 1];
    }
};

} // namespace

void simulation_state::refresh_norm(double dx) {
    norm = dx * kernels::norm_sq(amplitudes.data(), amplitudes.size());
}

lattice_model build_lattice(double gamma, double a, double length, double dx) {
    if (!(a > 0.0) || !(length > a))
        throw validation_error("build_lattice: need 0 < a < L");
    if (!(dx > 0.0)) throw validation_error("build_lattice: dx must be positive");
    double k_c = 2.0 * gamma;
    if (k_c > 0.0 && k_c * dx >= 0.2)
        throw validation_error("build_lattice: k_c*dx = " +
                               std::to_string(k_c * dx) +
                               " >= 0.2, refine the grid");
    lattice_model m;
    m.dx = dx;
    m.kappa = 1.0 / (2.0 * dx * dx);
    m.gamma = gamma;
    m.a = a;
    m.length = length;
    m.n_sites = static_cast<int>(std::lround(length / dx));
    m.gain_site = static_cast<int>(std::lround(a / dx));
    if (m.gain_site < 1 || m.gain_site > m.n_sites)
        throw validation_error("build_lattice: gain site falls off the grid");
    return m;
}

std::vector<cplx> sample_wave(const lattice_model& model,
                              const piecewise_wave& wave) {
    std::vector<cplx> out(model.n_sites);
    for (int j = 1; j <= model.n_sites; ++j)
        out[j - 1] = evaluate(wave, model.site_x(j));
    return out;
}

simulation_state sample_initial_state(const lattice_model& model) {
    simulation_state s;
    s.amplitudes = sample_wave(model, initial_cavity_state(2.0 * model.gamma, model.a));
    s.t = 0.0;
    s.refresh_norm(model.dx);
    double scale = 1.0 / std::sqrt(s.norm);
    for (auto& v : s.amplitudes) v *= scale;
    s.norm = 1.0;
    return s;
}

void evolve(const lattice_model& model, simulation_state& state, double dt,
            long steps) {
    if (static_cast<int>(state.amplitudes.size()) != model.n_sites)
        throw validation_error("evolve: state size does not match the model");
    if (!(dt > 0.0)) throw validation_error("evolve: dt must be positive");
    cn_solver solver(model, dt);
    std::vector<cplx> rhs(state.amplitudes.size());
    for (long s = 0; s < steps; ++s)
        solver.step(state.amplitudes, rhs);
    state.t += dt * steps;
    state.refresh_norm(model.dx);
}

cplx fidelity_against(const lattice_model& model,
                      const simulation_state& state,
                      const std::vector<cplx>& target) {
    double den = model.dx * kernels::norm_sq(state.amplitudes.data(),
                                             state.amplitudes.size());
    if (den < 1e-300) throw domain_error("fidelity: zero-norm state");
    cplx num = model.dx * kernels::cdotc(state.amplitudes.data(),
                                         target.data(), target.size());
    return num / den;
}

cplx fidelity(const lattice_model& model, const simulation_state& state,
              double k) {
    return fidelity_against(model, state,
                            sample_wave(model, cavity_wave(k, model.gamma, model.a)));
}

std::optional<double> relaxation_time(const fidelity_trace& trace,
                                      double window, double epsilon) {
    const std::size_t n = trace.times.size();
    if (n == 0 || trace.values.size() != n)
        throw validation_error("relaxation_time: empty or inconsistent trace");
    std::vector<double> mag(n);
    for (std::size_t i = 0; i < n; ++i) mag[i] = std::abs(trace.values[i]);

    for (std::size_t i = 0; i < n; ++i) {
        double t0 = trace.times[i];
        if (trace.times.back() < t0 + window) break; // window no longer covered
        double lo = mag[i], hi = mag[i];
        for (std::size_t j = i; j < n && trace.times[j] <= t0 + window; ++j) {
            lo = std::min(lo, mag[j]);
            hi = std::max(hi, mag[j]);
        }
        if (hi - lo < epsilon) return t0;
    }
    return std::nullopt;
}

std::vector<spectrum_point> k_spectrum(const lattice_model& model,
                                       const simulation_state& state,
                                       std::span<const double> k_grid) {
    std::vector<spectrum_point> spec;
    spec.reserve(k_grid.size());
    for (double k : k_grid)
        spec.push_back({k, std::abs(fidelity(model, state, k))});
    return spec;
}

double spectrum_peak(std::span<const spectrum_point> spec) {
    if (spec.empty()) throw domain_error("spectrum_peak: empty spectrum");
    std::size_t best = 0;
    for (std::size_t i = 1; i < spec.size(); ++i)
        if (spec[i].abs_f > spec[best].abs_f) best = i;
    return spec[best].k;
}

double spectrum_fwhm(std::span<const spectrum_point> spec) {
    if (spec.size() < 3) throw domain_error("spectrum_fwhm: spectrum too short");
    std::size_t peak = 0;
    for (std::size_t i = 1; i < spec.size(); ++i)
        if (spec[i].abs_f > spec[peak].abs_f) peak = i;
    double half = 0.5 * spec[peak].abs_f;

    auto cross = [&](std::size_t i, std::size_t j) {
        // linear interpolation of the half-maximum crossing between i and j
        double f0 = spec[i].abs_f, f1 = spec[j].abs_f;
        double w = (half - f0) / (f1 - f0);
        return spec[i].k + w * (spec[j].k - spec[i].k);
    };

    double left = spec.front().k, right = spec.back().k;
    bool found_left = false, found_right = false;
    for (std::size_t i = peak; i-- > 0;)
        if (spec[i].abs_f < half) {
            left = cross(i, i + 1);
            found_left = true;
            break;
        }
    for (std::size_t i = peak + 1; i < spec.size(); ++i)
        if (spec[i].abs_f < half) {
            right = cross(i, i - 1);
            found_right = true;
            break;
        }
    if (!found_left || !found_right)
        throw domain_error("spectrum_fwhm: half maximum not bracketed by the k grid");
    return right - left;
}

} // namespace sscat
