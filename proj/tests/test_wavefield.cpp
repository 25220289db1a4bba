#include <doctest.h>

#include <random>
#include <sstream>

#include "sscat/wavefield.hpp"

using namespace sscat;

namespace {
constexpr cplx I{0.0, 1.0};
}

TEST_CASE("two-delta SS wave, symmetric strengths") {
    // V1 = V2: the sin coefficient vanishes and the interior is cos(k_c x)
    auto w = two_delta_ss_wave(0.5, 0.5, 0.0, M_PI);
    for (double x : {0.1, 0.5, 1.0, 2.0, 3.0})
        CHECK(std::abs(evaluate(w, x) - std::cos(x)) < 1e-13);
    CHECK(continuity_residual(w) < 1e-12);
    std::vector<scattering_center> deltas{
        scattering_center::imaginary_delta(0.0, 0.5),
        scattering_center::imaginary_delta(M_PI, 0.5)};
    CHECK(jump_residual(w, deltas) < 1e-12);
}

TEST_CASE("two-delta SS wave, asymmetric strengths") {
    auto w = two_delta_ss_wave(0.6, 0.4, 0.0, M_PI);
    // interior = cos(x) + 0.2 i sin(x)
    cplx mid = evaluate(w, 1.3);
    CHECK(std::abs(mid - (std::cos(1.3) + I * 0.2 * std::sin(1.3))) < 1e-13);
    // e^{-ikx} on the left, e^{+ikx} on the right, unit amplitude
    CHECK(std::abs(evaluate(w, -2.0) - std::exp(-I * 1.0 * -2.0)) < 1e-13);
    CHECK(std::abs(std::abs(evaluate(w, 25.0)) - 1.0) < 1e-13);

    std::vector<scattering_center> deltas{
        scattering_center::imaginary_delta(0.0, 0.6),
        scattering_center::imaginary_delta(M_PI, 0.4)};
    CHECK(continuity_residual(w) < 1e-12);
    CHECK(jump_residual(w, deltas) < 1e-12);

    // outgoing-only in the outermost regions
    CHECK(std::abs(w.regions.front().c_plus) < 1e-12);
    CHECK(std::abs(w.regions.back().c_minus) < 1e-12);
}

TEST_CASE("two-delta SS wave away from the origin") {
    double v1 = 0.7, v2 = 0.8, x1 = 1.9;
    double k = v1 + v2;
    double x2 = x1 + 2.0 * M_PI / k;
    auto w = two_delta_ss_wave(v1, v2, x1, x2);
    CHECK(continuity_residual(w) < 1e-12);
    std::vector<scattering_center> deltas{
        scattering_center::imaginary_delta(x1, v1),
        scattering_center::imaginary_delta(x2, v2)};
    CHECK(jump_residual(w, deltas) < 1e-12);

    CHECK_THROWS_AS(two_delta_ss_wave(0.5, 0.5, 0.0, 1.0), domain_error);
}

TEST_CASE("cavity wave") {
    // Hermitian limit: pure standing wave
    auto h = cavity_wave(1.3, 0.0, 2.0);
    for (double x : {0.5, 1.9, 2.7, 6.0})
        CHECK(std::abs(evaluate(h, x) - std::sin(1.3 * x)) < 1e-13);

    // at the SS the exterior is -i e^{i k_c x}
    double gamma = 1.0, k_c = 2.0;
    double a = 10.25 * M_PI;
    auto w = cavity_wave(k_c, gamma, a);
    CHECK(std::abs(w.regions.back().c_plus + I) < 1e-12);
    CHECK(std::abs(w.regions.back().c_minus) < 1e-12);
    double x = a + 3.7;
    CHECK(std::abs(evaluate(w, x) + I * std::exp(I * (k_c * x))) < 1e-12);

    // generic parameters satisfy the wall, continuity, and jump conditions
    auto g = cavity_wave(0.9, 0.35, 3.1);
    CHECK(std::abs(evaluate(g, 0.0)) < 1e-13);
    CHECK(continuity_residual(g) < 1e-12);
    std::vector<scattering_center> deltas{
        scattering_center::imaginary_delta(3.1, 0.35)};
    CHECK(jump_residual(g, deltas) < 1e-12);
}

TEST_CASE("initial cavity state") {
    double k_c = 2.0, a = 10.25 * M_PI;
    auto psi0 = initial_cavity_state(k_c, a);
    CHECK(norm_sq_window(psi0, 0.0, a) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(evaluate(psi0, a + 1.0)) < 1e-15);

    // shape proportional to sin(k_c x) inside
    cplx ratio = evaluate(psi0, 1.0) / std::sin(k_c * 1.0);
    CHECK(std::abs(evaluate(psi0, 2.1) - ratio * std::sin(k_c * 2.1)) < 1e-13);

    // unit overlap with the stationary solution on the cavity window
    auto target = cavity_wave(k_c, k_c / 2.0, a);
    cplx ov = overlap(psi0, target, 0.0, a);
    double tn = std::sqrt(norm_sq_window(target, 0.0, a));
    CHECK(std::abs(ov) / tn == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evaluate region boundaries and domain") {
    auto w = cavity_wave(1.1, 0.4, 2.5);
    CHECK(std::abs(evaluate(w, 0.0)) < 1e-15);
    // both sides of the interface agree
    cplx left = evaluate(w, std::nextafter(2.5, 0.0));
    cplx right = evaluate(w, 2.5);
    CHECK(std::abs(left - right) < 1e-12);
    CHECK_THROWS_AS(evaluate(w, -0.1), domain_error);
}

TEST_CASE("stored form solves the Helmholtz equation") {
    // finite-difference check of -psi''/2 = (k^2/2) psi inside a region
    auto w = two_delta_ss_wave(0.6, 0.4, 0.0, M_PI);
    double h = 1e-5, x = 1.234;
    cplx dd = (evaluate(w, x + h) - 2.0 * evaluate(w, x) + evaluate(w, x - h)) / (h * h);
    CHECK(std::abs(-0.5 * dd - 0.5 * w.k * w.k * evaluate(w, x)) < 1e-5);
}

TEST_CASE("overlap handles mismatched wavenumbers") {
    // orthogonality of box modes: int_0^a sin(k1 x) sin(k2 x) = 0 when both
    // vanish at 0 and a
    double a = 2.0;
    auto w1 = cavity_wave(M_PI / a, 0.0, a);
    auto w2 = cavity_wave(2.0 * M_PI / a, 0.0, a);
    CHECK(std::abs(overlap(w1, w2, 0.0, a)) < 1e-13);
    CHECK(norm_sq_window(w1, 0.0, a) == doctest::Approx(a / 2.0).epsilon(1e-12));
}

TEST_CASE("csv export") {
    auto w = cavity_wave(1.0, 0.5, 2.0);
    std::ostringstream os;
    write_csv(os, w, 0.0, 4.0, 5);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "x,re_psi,im_psi,abs2_psi");
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 5);
}
