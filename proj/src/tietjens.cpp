#include "tsdisp/tietjens.hpp"

#include <cmath>
#include <stdexcept>

namespace tsdisp {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kXiDir = -std::polar(1.0, kPi / 6.0);  // -e^{i pi/6}
const cplx kE4 = std::polar(1.0, kPi / 4.0);
constexpr double kSwitchY = 8.0;  // regime switch, validated by the overlap tests
}  // namespace

cplx tietjens_direct(cplx w) {
    if (std::abs(w) > 60.0) {
        // far outside the Airy evaluation envelope; the expansion error is
        // below 1e-6 here and vanishes like |w|^{-9/2}
        const cplx u = kE4 * std::pow(w, -1.5);
        return u * (1.0 + 1.25 * u + 151.0 / 32.0 * u * u);
    }
    const cplx xi = kXiDir * w;
    const AiryTriple t = airy_triple(xi);
    const cplx denom = xi * t.ai1;
    if (std::abs(denom) < 1e-12) throw std::domain_error("tietjens: pole of the Airy quotient");
    return t.ai2 / denom;
}

cplx tietjens_asymptotic(double y, int terms) {
    if (terms < 1 || terms > 3) throw std::domain_error("tietjens_asymptotic: terms must be 1..3");
    const cplx u = kE4 * std::pow(y, -1.5);
    cplx s = 1.0;
    if (terms >= 2) s += 1.25 * u;
    if (terms >= 3) s += 151.0 / 32.0 * u * u;
    return u * s;
}

TietjensSample tietjens(double y) {
    if (!(y > 0.0)) throw std::domain_error("tietjens: requires y > 0");
    if (y < kSwitchY) return {y, tietjens_direct(cplx(y)), TiRegime::direct};
    return {y, tietjens_asymptotic(y, 3), TiRegime::asymptotic};
}

TietjensZero tietjens_real_zero() {
    double lo = 2.0, hi = 2.6;
    double flo = std::imag(tietjens_direct(cplx(lo)));
    const double fhi = std::imag(tietjens_direct(cplx(hi)));
    if (flo == 0.0) return {lo, std::real(tietjens_direct(cplx(lo)))};
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::runtime_error("tietjens_real_zero: no sign change of Im Ti on (2.0, 2.6)");
    for (int i = 0; i < 30; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = std::imag(tietjens_direct(cplx(mid)));
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    // secant polish on Im Ti
    double x0 = lo, x1 = hi;
    double f0 = std::imag(tietjens_direct(cplx(x0)));
    double f1 = std::imag(tietjens_direct(cplx(x1)));
    for (int i = 0; i < 20 && f1 != f0; ++i) {
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = std::imag(tietjens_direct(cplx(x1)));
        if (std::abs(f1) < 1e-15) break;
    }
    return {x1, std::real(tietjens_direct(cplx(x1)))};
}

}  // namespace tsdisp
