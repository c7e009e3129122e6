#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "tsdisp/shear_profile.hpp"

using tsdisp::cplx;
using tsdisp::critical_layer;
using tsdisp::CriticalLayerData;
using tsdisp::make_exponential_half_space;
using tsdisp::make_parabolic_strip;
using tsdisp::ProfileValue;
using tsdisp::ShearProfile;

TEST_CASE("exponential half-space profile basics") {
    const ShearProfile p = make_exponential_half_space(1.0);
    CHECK(std::abs(p(cplx(0.0)).u) == 0.0);
    CHECK(p(cplx(0.0)).du.real() == doctest::Approx(1.0));
    CHECK(p(cplx(0.0)).ddu.real() == doctest::Approx(-1.0));
    CHECK(std::abs(p(cplx(20.0)).u - 1.0) < 3e-9);
    // exponential convergence: ratio between y = 10 and y = 20
    const double d10 = std::abs(p(cplx(10.0)).u - 1.0);
    const double d20 = std::abs(p(cplx(20.0)).u - 1.0);
    CHECK(d20 < d10 * std::exp(-0.5 * 10.0));
    CHECK(std::abs(p(cplx(20.0)).du) < 3e-9);
    CHECK(std::abs(p(cplx(20.0)).ddu) < 3e-9);
}

TEST_CASE("parabolic strip profile basics") {
    const ShearProfile p = make_parabolic_strip();
    CHECK(std::abs(p(cplx(1.0)).u) < 1e-12);
    CHECK(std::abs(p(cplx(-1.0)).u) < 1e-12);
    CHECK(p(cplx(1.0)).du.real() == doctest::Approx(-2.0));
    CHECK(p(cplx(0.3)).u.real() == doctest::Approx(p(cplx(-0.3)).u.real()));
    CHECK(p.wall_slope() == doctest::Approx(-2.0));
}

TEST_CASE("profile evaluators are complex-analytic (Cauchy-Riemann)") {
    const double h = 1e-4;
    auto cr_residual = [&](const ShearProfile& p, cplx y) {
        const cplx dx = (p(y + h).u - p(y - h).u) / (2.0 * h);
        const cplx dy = (p(y + cplx(0.0, h)).u - p(y - cplx(0.0, h)).u) / (2.0 * h);
        return std::abs(dx - dy / cplx(0.0, 1.0));
    };
    const ShearProfile e = make_exponential_half_space(1.0);
    const ShearProfile s = make_parabolic_strip();
    for (const cplx y : {cplx(0.2, 0.1), cplx(1.0, -0.3), cplx(3.0, 0.5)})
        CHECK(cr_residual(e, y) < 1e-6);
    for (const cplx y : {cplx(0.5, 0.05), cplx(0.9, -0.02)})
        CHECK(cr_residual(s, y) < 1e-6);
}

TEST_CASE("critical layer against analytic inversion") {
    const ShearProfile p = make_exponential_half_space(1.0);
    const CriticalLayerData cl = critical_layer(p, cplx(0.1), 0.01, 1e-6);
    CHECK(cl.y_c.real() == doctest::Approx(0.1053605156578263).epsilon(1e-12));
    CHECK(std::abs(cl.y_c.imag()) < 1e-14);
    CHECK(std::abs(p(cl.y_c).u - 0.1) < 1e-12 * 0.1);

    const ShearProfile s = make_parabolic_strip();
    const CriticalLayerData cls = critical_layer(s, cplx(0.19), 0.01, 1e-6);
    CHECK(cls.y_c.real() == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("critical layer handles complex wave speed") {
    const ShearProfile p = make_exponential_half_space(1.0);
    const cplx c(0.08, 0.01);
    const CriticalLayerData cl = critical_layer(p, c, 0.02, 1e-8);
    const cplx expect = -std::log(1.0 - c);
    CHECK(std::abs(cl.y_c - expect) < 1e-12);
    CHECK(cl.gamma_tilde.real() > 0.0);
    // gamma_tilde^3 = alpha U'(y_c) / nu
    const cplx g3 = std::pow(cl.gamma_tilde, 3);
    CHECK(std::abs(g3 - 0.02 * p(cl.y_c).du / 1e-8) / std::abs(g3) < 1e-12);
}

TEST_CASE("strip gamma_tilde has positive real part") {
    const ShearProfile s = make_parabolic_strip();
    const CriticalLayerData cl = critical_layer(s, cplx(0.05, 0.002), 0.1, 1e-8);
    CHECK(cl.gamma_tilde.real() > 0.0);
    CHECK(std::abs(cl.gamma_tilde.imag()) < cl.gamma_tilde.real());
}

TEST_CASE("Lambda tends to one linearly in c") {
    const ShearProfile e = make_exponential_half_space(1.0);
    const ShearProfile s = make_parabolic_strip();
    for (const ShearProfile* p : {&e, &s}) {
        const double c1 = 0.08, c2 = 0.008;
        const double d1 = std::abs(critical_layer(*p, cplx(c1), 0.01, 1e-6).lambda_big - 1.0);
        const double d2 = std::abs(critical_layer(*p, cplx(c2), 0.01, 1e-6).lambda_big - 1.0);
        const double slope = std::log(d1 / d2) / std::log(c1 / c2);
        CHECK(slope == doctest::Approx(1.0).epsilon(0.1));
        CHECK(d1 < 0.6 * c1);  // frozen regression bound for the built-ins
    }
}

TEST_CASE("y_c is continuous along a path in the upper half c-plane") {
    const ShearProfile p = make_exponential_half_space(1.0);
    const int n = 40;
    cplx prev = critical_layer(p, cplx(0.05, 0.01), 0.01, 1e-6).y_c;
    double max_jump = 0.0;
    for (int i = 1; i <= n; ++i) {
        const cplx c = cplx(0.05 + 0.1 * i / n, 0.01);
        const cplx yc = critical_layer(p, c, 0.01, 1e-6).y_c;
        max_jump = std::max(max_jump, std::abs(yc - prev));
        prev = yc;
    }
    CHECK(max_jump < 10.0 * (0.1 / n));
}

TEST_CASE("critical layer rejects c = 0 and signals when lost") {
    const ShearProfile p = make_exponential_half_space(1.0);
    CHECK_THROWS_AS(critical_layer(p, cplx(0.0), 0.01, 1e-6), std::domain_error);
    CHECK_THROWS_AS(critical_layer(p, cplx(2.5), 0.01, 1e-6), std::runtime_error);
    CHECK_THROWS(make_exponential_half_space(0.0));
}
