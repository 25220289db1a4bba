#include "sscat/wavefield.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sscat {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx region_value(const wave_region& r, double k, double x) {
    return r.c_plus * std::exp(kI * (k * x)) + r.c_minus * std::exp(-kI * (k * x));
}

cplx region_derivative(const wave_region& r, double k, double x) {
    return kI * k *
           (r.c_plus * std::exp(kI * (k * x)) - r.c_minus * std::exp(-kI * (k * x)));
}

const wave_region& region_at(const piecewise_wave& wave, double x) {
    for (const auto& r : wave.regions)
        if (x >= r.x_lo && (x < r.x_hi || (x <= r.x_hi && &r == &wave.regions.back())))
            return r;
    throw domain_error("evaluate: x outside the wave's domain");
}

// integral of e^{iqx} over [lo, hi]
cplx phase_integral(double q, double lo, double hi) {
    if (std::abs(q) * (hi - lo) < 1e-12) return {hi - lo, 0.0};
    return (std::exp(kI * (q * hi)) - std::exp(kI * (q * lo))) / (kI * q);
}

} // namespace

cplx evaluate(const piecewise_wave& wave, double x) {
    return region_value(region_at(wave, x), wave.k, x);
}

cplx evaluate_derivative(const piecewise_wave& wave, double x) {
    return region_derivative(region_at(wave, x), wave.k, x);
}

piecewise_wave two_delta_ss_wave(double v1, double v2, double x1, double x2) {
    double k = v1 + v2;
    if (!(k > 0.0) || !(x2 > x1))
        throw domain_error("two_delta_ss_wave: need V1+V2 > 0 and x2 > x1");
    double m = k * (x2 - x1) / M_PI;
    if (std::abs(m - std::round(m)) > 1e-9)
        throw domain_error("two_delta_ss_wave: (V1+V2)(x2-x1) must be a multiple of pi");

    double beta = (v1 - v2) / k;
    cplx shift = std::exp(kI * (k * x1)); // frame with x1 at the origin
    piecewise_wave w;
    w.k = k;
    w.regions.push_back({-kWaveInf, x1, 0.0, shift});
    w.regions.push_back({x1, x2, 0.5 * (1.0 + beta) / shift, 0.5 * (1.0 - beta) * shift});
    w.regions.push_back({x2, kWaveInf, 1.0 / shift, 0.0});
    return w;
}

piecewise_wave cavity_wave(double k, double gamma, double a) {
    if (!(k > 0.0) || !(a > 0.0))
        throw domain_error("cavity_wave: k and a must be positive");
    piecewise_wave w;
    w.k = k;
    const cplx half_i{0.0, 0.5};
    w.regions.push_back({0.0, a, -half_i, half_i});
    cplx g = gamma * std::sin(k * a) / k;
    w.regions.push_back({a, kWaveInf,
                         -half_i + g * std::exp(-kI * (k * a)),
                         half_i - g * std::exp(kI * (k * a))});
    return w;
}

piecewise_wave initial_cavity_state(double k_c, double a) {
    if (!(k_c > 0.0) || !(a > 0.0))
        throw domain_error("initial_cavity_state: k_c and a must be positive");
    double lambda = 2.0 * a - std::sin(2.0 * k_c * a) / k_c;
    double c = 1.0 / std::sqrt(lambda);
    piecewise_wave w;
    w.k = k_c;
    w.regions.push_back({0.0, a, c, -c});
    w.regions.push_back({a, kWaveInf, 0.0, 0.0});
    return w;
}

double continuity_residual(const piecewise_wave& wave) {
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < wave.regions.size(); ++i) {
        double b = wave.regions[i].x_hi;
        cplx left = region_value(wave.regions[i], wave.k, b);
        cplx right = region_value(wave.regions[i + 1], wave.k, b);
        worst = std::max(worst, std::abs(left - right));
    }
    return worst;
}

double jump_residual(const piecewise_wave& wave,
                     std::span<const scattering_center> deltas) {
    double worst = 0.0;
    for (const auto& c : deltas) {
        double x0 = c.position;
        const wave_region* before = nullptr;
        const wave_region* after = nullptr;
        for (const auto& r : wave.regions) {
            if (std::abs(r.x_hi - x0) < 1e-12) before = &r;
            if (std::abs(r.x_lo - x0) < 1e-12) after = &r;
        }
        if (!before || !after)
            throw domain_error("jump_residual: delta is not a region boundary");
        cplx dplus = region_derivative(*after, wave.k, x0);
        cplx dminus = region_derivative(*before, wave.k, x0);
        cplx value = region_value(*after, wave.k, x0);
        worst = std::max(worst, std::abs(dplus - dminus - 2.0 * c.strength * value));
    }
    return worst;
}

cplx overlap(const piecewise_wave& a, const piecewise_wave& b, double lo,
             double hi) {
    if (!(hi > lo)) throw domain_error("overlap: empty window");
    std::vector<double> cuts{lo, hi};
    for (const auto* w : {&a, &b})
        for (const auto& r : w->regions) {
            if (r.x_lo > lo && r.x_lo < hi) cuts.push_back(r.x_lo);
            if (r.x_hi > lo && r.x_hi < hi) cuts.push_back(r.x_hi);
        }
    std::sort(cuts.begin(), cuts.end());
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double s0 = cuts[i], s1 = cuts[i + 1];
        if (!(s1 > s0)) continue;
        const auto& ra = region_at(a, 0.5 * (s0 + s1));
        const auto& rb = region_at(b, 0.5 * (s0 + s1));
        // conj(a) * b expands into four plane-wave terms
        const cplx ca[2] = {std::conj(ra.c_plus), std::conj(ra.c_minus)};
        const double qa[2] = {-a.k, a.k};
        const cplx cb[2] = {rb.c_plus, rb.c_minus};
        const double qb[2] = {b.k, -b.k};
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v)
                acc += ca[u] * cb[v] * phase_integral(qa[u] + qb[v], s0, s1);
    }
    return acc;
}

double norm_sq_window(const piecewise_wave& a, double lo, double hi) {
    return overlap(a, a, lo, hi).real();
}

void write_csv(std::ostream& os, const piecewise_wave& wave, double lo,
               double hi, int points) {
    if (points < 2) throw domain_error("write_csv: need at least 2 points");
    os << "x,re_psi,im_psi,abs2_psi\n";
    char buf[160];
    for (int i = 0; i < points; ++i) {
        double x = lo + (hi - lo) * i / (points - 1);
        cplx v = evaluate(wave, x);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", x,
                      v.real(), v.imag(), std::norm(v));
        os << buf;
    }
}

} // namespace sscat
