#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "tsdisp/complex_airy.hpp"
#include "tsdisp/tietjens.hpp"

using tsdisp::airy;
using tsdisp::airy_triple;
using tsdisp::AiryTriple;
using tsdisp::cplx;

#include "airy_oracle.inc"

namespace {

double rel(cplx got, cplx want) {
    const double scale = std::max(std::abs(want), 1e-30);
    return std::abs(got - want) / scale;
}

// independent Maclaurin oracle for Ai on the real axis, summed term by term
double ai_series_oracle(double x) {
    const double c1 = 0.35502805388781723926, c2 = 0.25881940379280679840;
    double f = 1.0, g = x, tf = 1.0, tg = x;
    for (int k = 0; k < 60; ++k) {
        tf *= x * x * x / ((3.0 * k + 2) * (3.0 * k + 3));
        tg *= x * x * x / ((3.0 * k + 3) * (3.0 * k + 4));
        f += tf;
        g += tg;
    }
    return c1 * f - c2 * g;
}

}  // namespace

TEST_CASE("airy triple matches the high-precision table in every region") {
    for (const auto& row : kAiryOracle) {
        const cplx z(row[0], row[1]);
        const AiryTriple t = airy_triple(z);
        CAPTURE(row[0]);
        CAPTURE(row[1]);
        CHECK(rel(t.ai, cplx(row[2], row[3])) < 1e-9);
        CHECK(rel(t.ai1, cplx(row[4], row[5])) < 1e-9);
        CHECK(rel(t.ai2, cplx(row[6], row[7])) < 1e-9);
    }
}

TEST_CASE("airy values at 0 and 1 against the series oracle") {
    CHECK(std::abs(airy(cplx(0.0)) - cplx(0.3550280539, 0.0)) < 1e-9);
    CHECK(std::abs(airy(cplx(1.0)) - cplx(0.1352924163, 0.0)) < 1e-9);
    CHECK(std::abs(airy(cplx(0.0)).real() - ai_series_oracle(0.0)) < 1e-14);
    CHECK(std::abs(airy(cplx(1.0)).real() - ai_series_oracle(1.0)) < 1e-14);
    CHECK(std::abs(airy(cplx(3.2)).real() - ai_series_oracle(3.2)) < 1e-14);
}

TEST_CASE("airy satisfies its defining ode under finite differences") {
    const double h = 0.005;
    auto ode_residual = [&](cplx z) {
        const cplx f2 = (-airy(z + 2.0 * h) + 16.0 * airy(z + h) - 30.0 * airy(z) +
                         16.0 * airy(z - h) - airy(z - 2.0 * h)) /
                        (12.0 * h * h);
        return std::abs(f2 - z * airy(z)) / std::max(1.0, std::abs(z * airy(z)));
    };
    // grid over all quadrants, |z| <= 5
    for (double r = 0.5; r <= 5.0; r += 1.5) {
        for (int k = 0; k < 8; ++k) {
            const cplx z = std::polar(r, k * 3.14159265358979323846 / 4.0);
            CAPTURE(z.real());
            CAPTURE(z.imag());
            CHECK(ode_residual(z) < 1e-7);
        }
    }
    // absolute check at the spec point
    const cplx z(2.0, 1.0);
    const cplx f2 = (-airy(z + 2.0 * h) + 16.0 * airy(z + h) - 30.0 * airy(z) +
                     16.0 * airy(z - h) - airy(z - 2.0 * h)) /
                    (12.0 * h * h);
    CHECK(std::abs(f2 - z * airy(z)) < 1e-8);
}

TEST_CASE("primitive chain ai2 -> ai1 -> ai under finite differences") {
    const double h = 0.01;
    for (double x = -3.0; x <= 8.0; x += 0.5) {
        const AiryTriple t = airy_triple(cplx(x));
        auto d5 = [&](auto field) {
            const auto f = [&](double xx) { return field(airy_triple(cplx(xx))); };
            return (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h);
        };
        const cplx d_ai1 = d5([](const AiryTriple& a) { return a.ai1; });
        const cplx d_ai2 = d5([](const AiryTriple& a) { return a.ai2; });
        CAPTURE(x);
        CHECK(std::abs(d_ai1 - t.ai) / std::abs(t.ai) < 1e-6);
        CHECK(std::abs(d_ai2 - t.ai1) / std::abs(t.ai1) < 1e-6);
    }
}

TEST_CASE("primitives vanish monotonically on the positive axis") {
    double prev1 = 1e300, prev2 = 1e300;
    for (double x = 4.0; x <= 10.0; x += 1.0) {
        const AiryTriple t = airy_triple(cplx(x));
        CHECK(std::abs(t.ai1) < prev1);
        CHECK(std::abs(t.ai2) < prev2);
        prev1 = std::abs(t.ai1);
        prev2 = std::abs(t.ai2);
    }
    const AiryTriple t10 = airy_triple(cplx(10.0));
    CHECK(std::abs(t10.ai1) < 1e-9);
    CHECK(std::abs(t10.ai2) < 1e-9);
}

TEST_CASE("ai1(0) equals -1/3") {
    CHECK(std::abs(airy_triple(cplx(0.0)).ai1 - cplx(-1.0 / 3.0)) < 1e-12);
}

TEST_CASE("evaluation paths agree on their overlaps") {
    using tsdisp::detail::airy_asymptotic;
    using tsdisp::detail::airy_maclaurin;
    using tsdisp::detail::airy_marched;
    auto agree = [&](const AiryTriple& a, const AiryTriple& b) {
        CHECK(rel(a.ai, b.ai) < 1e-9);
        CHECK(rel(a.ai1, b.ai1) < 1e-9);
        CHECK(rel(a.ai2, b.ai2) < 1e-9);
    };
    // series vs inward march near the inner boundary of the wedge
    for (double th = -1.0; th <= 1.0; th += 0.4) {
        agree(airy_maclaurin(std::polar(4.4, th)), airy_marched(std::polar(4.4, th), 12.0));
    }
    // inward march vs direct asymptotics near the anchor circle
    for (double th = -1.0; th <= 1.0; th += 0.4) {
        agree(airy_marched(std::polar(11.9, th), 14.0), airy_asymptotic(std::polar(11.9, th)));
    }
    // outward march vs asymptotics and series in the mid sector
    for (double th = 1.3; th <= 2.05; th += 0.25) {
        agree(airy_marched(std::polar(11.9, th), 4.5), airy_asymptotic(std::polar(11.9, th)));
        agree(airy_marched(std::polar(11.9, -th), 4.5), airy_asymptotic(std::polar(11.9, -th)));
        agree(airy_marched(std::polar(4.6, th), 4.5), airy_maclaurin(std::polar(4.6, th)));
    }
}

// ---------------------------------------------------------------------------

TEST_CASE("tietjens landmark zero") {
    const tsdisp::TietjensZero z = tsdisp::tietjens_real_zero();
    CHECK(z.z0 == doctest::Approx(2.297).epsilon(0).scale(0).epsilon(0.0022));
    CHECK(std::abs(z.z0 - 2.297) < 0.005);
    CHECK(std::abs(z.ti_at_z0 - 0.5644) < 0.002);
    CHECK(std::abs(std::imag(tsdisp::tietjens_direct(cplx(z.z0)))) < 1e-8);
}

TEST_CASE("tietjens expansion against direct evaluation") {
    // one-term value at y = 100
    const cplx t1 = tsdisp::tietjens_asymptotic(100.0, 1);
    CHECK(std::abs(t1 - std::polar(1.0, 3.14159265358979323846 / 4.0) * 1e-3) < 1e-15);
    // second-term increment at y = 10
    const cplx d21 = tsdisp::tietjens_asymptotic(10.0, 2) - tsdisp::tietjens_asymptotic(10.0, 1);
    CHECK(std::abs(d21) == doctest::Approx(1.25e-3).epsilon(1e-9));
    // direct vs 3 terms
    const cplx d10 = tsdisp::tietjens_direct(cplx(10.0));
    CHECK(std::abs(d10 - tsdisp::tietjens_asymptotic(10.0, 3)) / std::abs(d10) < 0.02);
    const cplx d30 = tsdisp::tietjens_direct(cplx(30.0));
    CHECK(std::abs(d30 - tsdisp::tietjens_asymptotic(30.0, 3)) / std::abs(d30) < 0.001);
}

TEST_CASE("tietjens regimes agree on the overlap window") {
    for (double y = 8.0; y <= 12.0; y += 0.5) {
        const cplx direct = tsdisp::tietjens_direct(cplx(y));
        const cplx asym = tsdisp::tietjens_asymptotic(y, 3);
        CHECK(std::abs(direct - asym) / std::abs(direct) < 0.01);
    }
}

TEST_CASE("tietjens sampling: regime flag and boundedness") {
    CHECK(tsdisp::tietjens(5.0).regime == tsdisp::TiRegime::direct);
    CHECK(tsdisp::tietjens(9.0).regime == tsdisp::TiRegime::asymptotic);
    double max_mod = 0.0;
    double arg_at_max = 0.0;
    for (double y = 0.1; y <= 50.0; y += 0.1) {
        const double m = std::abs(tsdisp::tietjens(y).value);
        if (m > max_mod) {
            max_mod = m;
            arg_at_max = y;
        }
    }
    CHECK(max_mod < 10.0);
    CHECK(arg_at_max < 1.0);  // attained at small y
    CHECK(std::abs(tsdisp::tietjens(50.0).value) < 0.004);
}

TEST_CASE("tietjens rejects nonpositive arguments") {
    CHECK_THROWS_AS(tsdisp::tietjens(0.0), std::domain_error);
    CHECK_THROWS_AS(tsdisp::tietjens(-1.0), std::domain_error);
    CHECK_THROWS_AS(tsdisp::tietjens_asymptotic(10.0, 4), std::domain_error);
}
