#include "sscat/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sscat {

namespace {

constexpr cplx kI{0.0, 1.0};

std::vector<scattering_center> normalize_centers(
    std::vector<scattering_center> centers) {
    std::sort(centers.begin(), centers.end(),
              [](const auto& a, const auto& b) { return a.position < b.position; });
    // coincident deltas merge into one of summed strength
    std::vector<scattering_center> out;
    for (const auto& c : centers) {
        if (!out.empty() && out.back().kind == c.kind &&
            c.kind != center_kind::hard_wall &&
            c.position == out.back().position) {
            out.back().strength += c.strength;
        } else {
            out.push_back(c);
        }
    }
    int walls = 0;
    for (const auto& c : out)
        if (c.kind == center_kind::hard_wall) ++walls;
    if (walls > 1 || (walls == 1 && out.front().kind != center_kind::hard_wall))
        throw validation_error("find_ss: at most one hard wall, at the left end");
    return out;
}

// golden-section minimization of f on [lo, hi]
template <typename F>
double golden_min(F&& f, double lo, double hi) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(b));
         ++it) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

cplx matching_residual(cplx r_right_a, cplx r_left_b, double separation,
                       double k) {
    if (separation <= 0.0)
        throw domain_error("matching_residual: separation must be positive");
    return r_right_a * r_left_b * std::exp(kI * (2.0 * k * separation)) - 1.0;
}

cplx wall_residual(std::span<const scattering_center> centers, double k,
                   double kappa) {
    if (centers.empty() || centers.front().kind != center_kind::hard_wall)
        throw validation_error("wall_residual: leftmost center must be a hard wall");
    double w = centers.front().position;
    transfer_matrix m = composite_matrix(centers.subspan(1), k, kappa);
    // outgoing-only solution with psi(w) = 0: left coefficients (1, -e^{2ikw});
    // the incoming coefficient on the right must vanish.
    return m.m21 - m.m22 * std::exp(kI * (2.0 * k * w));
}

ss_scan find_ss(const ss_query& query) {
    if (!(query.k_min < query.k_max))
        throw validation_error("find_ss: k_min must be below k_max");
    if (query.grid_points < 2)
        throw validation_error("find_ss: need at least 2 grid points");
    if (!(query.tolerance > 0.0))
        throw validation_error("find_ss: tolerance must be positive");

    auto centers = normalize_centers(query.centers);
    bool wall = !centers.empty() && centers.front().kind == center_kind::hard_wall;
    std::span<const scattering_center> span{centers};

    ss_scan scan;
    auto residual = [&](double k) -> cplx {
        return wall ? wall_residual(span, k, query.kappa)
                    : composite_m22(span, k, query.kappa);
    };

    const double nan = std::numeric_limits<double>::quiet_NaN();
    const int n = query.grid_points;
    std::vector<double> ks(n), f(n);
    for (int i = 0; i < n; ++i) {
        ks[i] = query.k_min + (query.k_max - query.k_min) * i / (n - 1);
        try {
            f[i] = std::norm(residual(ks[i]));
        } catch (const singular_amplitude_error& e) {
            f[i] = nan;
            scan.warnings.push_back("amplitude pole near k = " +
                                    std::to_string(ks[i]) + ": " + e.what());
        }
    }

    auto safe_f = [&](double k) {
        try {
            return std::norm(residual(k));
        } catch (const singular_amplitude_error&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    for (int i = 1; i + 1 < n; ++i) {
        if (std::isnan(f[i]) || std::isnan(f[i - 1]) || std::isnan(f[i + 1]))
            continue;
        if (!(f[i] < f[i - 1] && f[i] <= f[i + 1])) continue;
        double kc = golden_min(safe_f, ks[i - 1], ks[i + 1]);
        double res = std::sqrt(safe_f(kc));
        if (res >= query.tolerance) continue;
        if (!scan.singularities.empty() &&
            std::abs(scan.singularities.back().k_c - kc) < 1e-9)
            continue;

        ss_result r;
        r.k_c = kc;
        r.residual = res;
        // informational order estimate from the growth of |residual| nearby
        double d1 = 1e-5 * std::max(1.0, std::abs(kc));
        double g1 = std::sqrt(safe_f(kc + d1));
        double g2 = std::sqrt(safe_f(kc + 10.0 * d1));
        if (g1 > 0.0 && std::isfinite(g2)) {
            double p = std::log(g2 / g1) / std::log(10.0);
            r.multiplicity_hint = std::max(1, static_cast<int>(std::lround(p)));
        }
        scan.singularities.push_back(r);
    }
    return scan;
}

two_delta_design design_two_delta(double k_c, double split, int m) {
    if (!(k_c > 0.0)) throw domain_error("design_two_delta: k_c must be positive");
    if (m < 1) throw domain_error("design_two_delta: m must be positive");
    return {split * k_c, (1.0 - split) * k_c, m * M_PI / k_c};
}

lattice_pair_design design_lattice_pair(double k_c, long a, double kappa) {
    if (!(k_c > 0.0 && k_c < M_PI))
        throw domain_error("design_lattice_pair: k_c must lie in (0, pi)");
    if (a < 1) throw domain_error("design_lattice_pair: a must be >= 1");
    if (!(kappa > 0.0)) throw domain_error("design_lattice_pair: kappa must be positive");
    double phase = 2.0 * k_c * a;
    if (std::abs(std::sin(phase)) < 1e-12)
        throw degenerate_geometry_error("design_lattice_pair: 2 k_c a is a multiple of pi");
    double s = 2.0 * kappa * std::sin(k_c);
    return {s / (1.0 - std::cos(phase)), -s / std::tan(phase)};
}

cavity_design design_cavity(double gamma, int n) {
    if (!(gamma > 0.0)) throw domain_error("design_cavity: gamma must be positive");
    if (n < 0) throw domain_error("design_cavity: n must be non-negative");
    double k_c = 2.0 * gamma;
    return {k_c, (n + 0.5) * M_PI / k_c};
}

} // namespace sscat
