#include "tsdisp/complex_airy.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace tsdisp {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAi0 = 0.35502805388781723926;    // Ai(0) = 3^{-2/3}/Gamma(2/3)
constexpr double kAip0 = -0.25881940379280679840;  // Ai'(0) = -3^{-1/3}/Gamma(1/3)
constexpr double kSqrtPi = 1.77245385090551602730;

// Region boundaries.  The Maclaurin series loses digits to cancellation where
// Ai is recessive, and the primitive expansions carry factorially growing
// coefficients (error floor ~ e^{-|zeta|}), so direct asymptotics start at
// |z| = 12.  The annulus in between is bridged by Taylor-marching along the
// ray: inward from the asymptotic anchor where Ai is recessive (|arg z| <
// pi/3), outward from the Maclaurin circle where it is dominant.
constexpr double kSeriesRadius = 4.5;
constexpr double kWedgeArg = kPi / 3.0 + 0.15;
constexpr double kAnchorRadius = 12.0;

struct AiryState {
    cplx ai, aip, ai1, ai2;
};

// ---------------------------------------------------------------------------
// Maclaurin series: Ai = Ai(0) f + Ai'(0) g with the two standard Airy series,
// their derivatives, and their first/second term-wise integrals, all summed in
// one loop.
AiryState maclaurin(cplx z) {
    if (std::abs(z) < 1e-150) {
        return {kAi0, kAip0, cplx(-1.0 / 3.0), cplx(-kAip0)};
    }
    const cplx z3 = z * z * z;
    cplx tf = 1.0, tg = z;                    // terms of f and g at index k
    cplx f = tf, g = tg;
    cplx fp = 0.0, gp = 1.0;                  // f', g'
    cplx fi = z, gi = z * z / 2.0;            // int_0^z f, int_0^z g
    cplx fii = z * z / 2.0, gii = z3 / 6.0;   // twice-integrated
    for (int k = 0; k < 260; ++k) {
        const double a2 = 3.0 * k + 2, a3 = 3.0 * k + 3, a4 = 3.0 * k + 4, a5 = 3.0 * k + 5,
                     a6 = 3.0 * k + 6;
        tf *= z3 / (a2 * a3);  // now index k+1
        tg *= z3 / (a3 * a4);
        f += tf;
        g += tg;
        fp += a3 * tf / z;
        gp += a4 * tg / z;
        fi += tf * z / a4;
        gi += tg * z / a5;
        fii += tf * z * z / (a4 * a5);
        gii += tg * z * z / (a5 * a6);
        if (k > 3 && std::abs(tf) + std::abs(tg) < 1e-18 * (std::abs(f) + std::abs(g))) break;
    }
    AiryState s;
    s.ai = kAi0 * f + kAip0 * g;
    s.aip = kAi0 * fp + kAip0 * gp;
    s.ai1 = kAi0 * fi + kAip0 * gi - 1.0 / 3.0;
    s.ai2 = kAi0 * fii + kAip0 * gii - kAip0 - z / 3.0;
    return s;
}

// ---------------------------------------------------------------------------
// Asymptotic series coefficients.
//   Ai  ~ e^{-zeta}/(2 sqrt(pi)) z^{-1/4} sum (-1)^k u_k zeta^{-k}
//   Ai' ~ -e^{-zeta}/(2 sqrt(pi)) z^{+1/4} sum (-1)^k v_k zeta^{-k}
//   A1  ~ e^{-zeta}/(2 sqrt(pi)) z^{-3/4} sum a_k zeta^{-k},  A1 = int_z^inf Ai
//   A2  ~ e^{-zeta}/(2 sqrt(pi)) z^{-5/4} sum b_k zeta^{-k},  A2 = int_z^inf (t-z) Ai
// a_k, b_k follow from term-wise differentiation: a_k = (-1)^k u_k - (k-1/2) a_{k-1},
// b_k = a_k - (k-1/6) b_{k-1}.
struct AsymCoeffs {
    std::array<double, 40> u, v, a, b;
};

const AsymCoeffs& asym_coeffs() {
    static const AsymCoeffs c = [] {
        AsymCoeffs c{};
        c.u[0] = c.v[0] = c.a[0] = c.b[0] = 1.0;
        for (int k = 0; k + 1 < 40; ++k) {
            c.u[k + 1] = c.u[k] * (6.0 * k + 1.0) * (6.0 * k + 5.0) / (72.0 * (k + 1.0));
            c.v[k + 1] = c.u[k + 1] * (6.0 * (k + 1) + 1.0) / (1.0 - 6.0 * (k + 1));
        }
        for (int k = 1; k < 40; ++k) {
            const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            c.a[k] = sgn * c.u[k] - (k - 0.5) * c.a[k - 1];
            c.b[k] = c.a[k] - (k - 1.0 / 6.0) * c.b[k - 1];
        }
        return c;
    }();
    return c;
}

cplx asym_sum(const std::array<double, 40>& coef, cplx inv_zeta, bool alternating) {
    cplx sum = coef[0];
    cplx pw = 1.0;
    double prev = 1e300;
    for (int k = 1; k < 40; ++k) {
        pw *= inv_zeta;
        const double ck = (alternating && (k % 2 == 1)) ? -coef[k] : coef[k];
        const cplx term = ck * pw;
        const double m = std::abs(term);
        if (m > prev) break;  // smallest-term truncation
        sum += term;
        prev = m;
        if (m < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// Valid for |arg z| <= 2 pi/3 and |z| moderately large.
AiryState asymptotic(cplx z) {
    const cplx sq = std::sqrt(z);
    const cplx zeta = 2.0 / 3.0 * z * sq;
    if (-zeta.real() > 690.0) throw std::overflow_error("airy: exponential overflow");
    const cplx inv_zeta = 1.0 / zeta;
    const cplx pref = std::exp(-zeta) / (2.0 * kSqrtPi);
    const cplx z14 = std::sqrt(sq);
    const auto& C = asym_coeffs();
    AiryState s;
    s.ai = pref / z14 * asym_sum(C.u, inv_zeta, true);
    s.aip = -pref * z14 * asym_sum(C.v, inv_zeta, true);
    s.ai1 = -(pref / (z14 * sq) * asym_sum(C.a, inv_zeta, false));
    s.ai2 = pref / (z14 * z) * asym_sum(C.b, inv_zeta, false);
    return s;
}

// ---------------------------------------------------------------------------
// Taylor-march the state (ai, ai', ai1, ai2) from z0 to z along a straight
// segment.  Stable whenever the marched solution does not decay along the
// path: inward in the recessive wedge, outward in the dominant mid sector.
AiryState march_segment(AiryState s, cplx z0, cplx z) {
    const int nsteps = std::max(1, static_cast<int>(std::ceil(std::abs(z - z0) / 0.35)));
    const cplx h = (z - z0) / static_cast<double>(nsteps);
    constexpr int N = 34;
    std::array<cplx, N> t{};
    for (int step = 0; step < nsteps; ++step) {
        t[0] = s.ai;
        t[1] = s.aip;
        t[2] = 0.5 * z0 * t[0];
        for (int m = 1; m + 2 < N; ++m)
            t[m + 2] = (z0 * t[m] + t[m - 1]) / ((m + 1.0) * (m + 2.0));
        cplx ai = 0.0, aip = 0.0, di1 = 0.0, di2 = 0.0;
        cplx hp = 1.0;  // h^m
        for (int m = 0; m < N; ++m) {
            ai += t[m] * hp;
            if (m >= 1) aip += static_cast<double>(m) * t[m] * hp / h;
            di1 += t[m] * hp * h / (m + 1.0);
            di2 += t[m] * hp * h * h / ((m + 1.0) * (m + 2.0));
            hp *= h;
        }
        s.ai2 += s.ai1 * h + di2;
        s.ai1 += di1;
        s.ai = ai;
        s.aip = aip;
        z0 += h;
    }
    return s;
}

AiryState march_inward(cplx z, double anchor_radius) {
    const cplx anchor = anchor_radius * (z / std::abs(z));
    return march_segment(asymptotic(anchor), anchor, z);
}

AiryState march_outward(cplx z, double start_radius) {
    const cplx start = start_radius * (z / std::abs(z));
    return march_segment(maclaurin(start), start, z);
}

AiryState dispatch(cplx z);

// Connection onto the two rotated sectors:
//   Ai(z)  = -[w Ai(wz) + w~ Ai(w~z)],          w = e^{2 pi i/3}
//   A1(z)  = 1 - A1(wz) - A1(w~z)        =>  ai1(z) = -1 - ai1(wz) - ai1(w~z)
//   A2(z)  = -z - w~ A2(wz) - w A2(w~z)
AiryState connected(cplx z) {
    const cplx om(-0.5, 0.86602540378443864676);
    const cplx omb(-0.5, -0.86602540378443864676);
    const AiryState p = dispatch(z * om);
    const AiryState q = dispatch(z * omb);
    AiryState s;
    s.ai = -(om * p.ai + omb * q.ai);
    s.aip = -(om * om * p.aip + omb * omb * q.aip);
    s.ai1 = -1.0 - p.ai1 - q.ai1;
    s.ai2 = -z - omb * p.ai2 - om * q.ai2;
    return s;
}

AiryState dispatch(cplx z) {
    const double r = std::abs(z);
    if (r <= kSeriesRadius) return maclaurin(z);
    const double th = std::abs(std::arg(z));
    if (th <= 2.0 * kPi / 3.0) {
        if (r >= kAnchorRadius) return asymptotic(z);
        if (th <= kWedgeArg) return march_inward(z, kAnchorRadius);
        return march_outward(z, kSeriesRadius);
    }
    return connected(z);
}

}  // namespace

AiryTriple airy_triple(cplx z) {
    const AiryState s = dispatch(z);
    return {s.ai, s.ai1, s.ai2};
}

cplx airy(cplx z) { return dispatch(z).ai; }

namespace detail {
AiryTriple airy_maclaurin(cplx z) {
    const AiryState s = maclaurin(z);
    return {s.ai, s.ai1, s.ai2};
}
AiryTriple airy_asymptotic(cplx z) {
    const AiryState s = asymptotic(z);
    return {s.ai, s.ai1, s.ai2};
}
AiryTriple airy_marched(cplx z, double anchor_radius) {
    const AiryState s = anchor_radius > std::abs(z) ? march_inward(z, anchor_radius)
                                                    : march_outward(z, anchor_radius);
    return {s.ai, s.ai1, s.ai2};
}
}  // namespace detail

}  // namespace tsdisp
