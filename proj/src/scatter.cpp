#include "sscat/scatter.hpp"

#include <cmath>

namespace sscat {

namespace {

constexpr cplx kI{0.0, 1.0};

// For a reciprocal center (r_L = r_R = r, t_L = t_R = t) the matrix is
//   [[1 - w, -w/phase], [w * phase, 1 + w]],  w = -r/t,
// with phase = e^{2ikx}. These entries stay finite at an amplitude pole,
// which is exactly where m22 vanishes.
transfer_matrix reciprocal_matrix(cplx w, double pos, double k) {
    cplx phase = std::exp(cplx{0.0, 2.0 * k * pos});
    return {1.0 - w, -w / phase, w * phase, 1.0 + w, k};
}

} // namespace

scattering_amplitudes delta_amplitudes(double v, double k) {
    if (k <= 0.0) throw domain_error("delta_amplitudes: k must be positive");
    if (std::abs(k - v) < 1e-300)
        throw singular_amplitude_error("delta amplitude pole at k = V");
    cplx r = v / cplx{k - v, 0.0};
    cplx t = k / cplx{k - v, 0.0};
    return {r, r, t, t, k};
}

scattering_amplitudes delta_amplitudes_complex(cplx s, double k) {
    if (k <= 0.0) throw domain_error("delta_amplitudes: k must be positive");
    cplx den = kI * k - s;
    if (std::abs(den) < 1e-14 * std::max(1.0, std::abs(s)))
        throw singular_amplitude_error("delta amplitude pole at s = ik");
    cplx r = s / den;
    cplx t = kI * k / den;
    return {r, r, t, t, k};
}

scattering_amplitudes lattice_amplitudes(cplx v, double kappa, double k) {
    if (kappa <= 0.0) throw domain_error("lattice_amplitudes: kappa must be positive");
    if (k <= 0.0 || k >= M_PI)
        throw domain_error("lattice_amplitudes: k must lie in (0, pi)");
    cplx den = 2.0 * kappa * std::sin(k) + kI * v;
    if (std::abs(den) < 1e-14 * 2.0 * kappa)
        throw singular_amplitude_error("lattice amplitude pole at 2 kappa sin k = -iV");
    cplx r = -kI * v / den;
    cplx t = 2.0 * kappa * std::sin(k) / den;
    return {r, r, t, t, k};
}

transfer_matrix center_matrix(const scattering_center& c, double k,
                              double kappa) {
    switch (c.kind) {
    case center_kind::continuous_delta: {
        if (k <= 0.0) throw domain_error("center_matrix: k must be positive");
        // r/t = s/(ik), so w = -r/t = i s / k
        return reciprocal_matrix(kI * c.strength / k, c.position, k);
    }
    case center_kind::lattice_site: {
        if (k <= 0.0 || k >= M_PI)
            throw domain_error("center_matrix: lattice k must lie in (0, pi)");
        cplx w = kI * c.strength / (2.0 * kappa * std::sin(k));
        return reciprocal_matrix(w, c.position, k);
    }
    case center_kind::hard_wall:
        throw unsupported_center_error(
            "hard wall enters as r = -1 in the matching condition, not as a matrix");
    }
    throw domain_error("unknown center kind");
}

transfer_matrix compose(const transfer_matrix& outer,
                        const transfer_matrix& inner) {
    if (std::abs(outer.k - inner.k) > kWavenumberTolerance)
        throw incompatible_wavenumber_error("compose: wavenumber mismatch");
    transfer_matrix m;
    m.m11 = outer.m11 * inner.m11 + outer.m12 * inner.m21;
    m.m12 = outer.m11 * inner.m12 + outer.m12 * inner.m22;
    m.m21 = outer.m21 * inner.m11 + outer.m22 * inner.m21;
    m.m22 = outer.m21 * inner.m12 + outer.m22 * inner.m22;
    m.k = inner.k;
    return m;
}

transfer_matrix composite_matrix(std::span<const scattering_center> centers,
                                 double k, double kappa) {
    if (centers.empty()) return transfer_matrix::identity(k);
    for (std::size_t i = 1; i < centers.size(); ++i)
        if (!(centers[i].position > centers[i - 1].position))
            throw validation_error("composite: positions must be strictly increasing");
    transfer_matrix m = transfer_matrix::identity(k);
    for (const auto& c : centers)
        m = compose(center_matrix(c, k, kappa), m);
    return m;
}

cplx composite_m22(std::span<const scattering_center> centers, double k,
                   double kappa) {
    return composite_matrix(centers, k, kappa).m22;
}

cplx jost_wronskian(std::span<const scattering_center> centers, double k,
                    double kappa) {
    bool lattice = !centers.empty() &&
                   centers.front().kind == center_kind::lattice_site;
    cplx scale = lattice ? cplx{0.0, -2.0 * std::sin(k)} : cplx{0.0, -2.0 * k};
    return scale * composite_m22(centers, k, kappa);
}

scattering_amplitudes amplitudes_from_matrix(const transfer_matrix& m) {
    if (std::abs(m.m22) < 1e-300)
        throw singular_amplitude_error("M22 = 0: transmission pole (SS)");
    scattering_amplitudes amp;
    amp.t_right = 1.0 / m.m22;
    amp.r_right = m.m12 / m.m22;
    amp.r_left = -m.m21 / m.m22;
    amp.t_left = m.det() / m.m22;
    amp.k = m.k;
    return amp;
}

} // namespace sscat
