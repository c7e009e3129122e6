#include "tsdisp/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "tsdisp/quadrature.hpp"
#include "tsdisp/tietjens.hpp"

namespace tsdisp {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kE4 = std::polar(1.0, kPi / 4.0);
}  // namespace

BranchPrediction half_space_prediction(const ShearProfile& profile, double nu) {
    if (profile.domain() != FlowDomain::half_space)
        throw std::domain_error("half_space_prediction: wrong profile domain");
    if (!(nu > 0.0)) throw std::domain_error("half_space_prediction: nu must be positive");
    const double up = profile.u_plus();
    const double s = profile.wall_slope();              // U'(0)
    const double curv = std::abs(profile(cplx(0.0)).ddu.real());  // |U''(0)|, D13/D16

    BranchPrediction out;
    out.nu = nu;
    out.lower_exponent = 0.25;
    out.upper_exponent = 1.0 / 6.0;
    out.sigma_tilde_exponent = 1.0 / 6.0;
    out.alpha_minus = kLowerPrefactorHalf * std::pow(s, 1.25) / std::pow(up, 1.5) * std::pow(nu, 0.25);
    out.alpha_plus = std::pow(std::pow(s, 11.0) / (2.0 * kPi * kPi * curv * curv * std::pow(up, 10.0)),
                              1.0 / 6.0) *
                     std::pow(nu, 1.0 / 6.0);
    out.c_lower = [up, s](double alpha) { return cplx(kLowerSpeedHalf * up * up / s * alpha); };
    out.sigma = [up, s, curv](double alpha, double nu_) {
        return std::sqrt(nu_) / (alpha * alpha) * std::pow(s, 2.5) / (up * up * up) * kE4 -
               cplx(0.0, kPi) * alpha * curv * up * up / (s * s * s);
    };
    auto sigma_copy = out.sigma;
    out.c_upper = [up, s, nu, sigma_copy](double alpha) {
        return up * up / s * alpha * (1.0 + sigma_copy(alpha, nu));
    };
    out.sigma_tilde = [up, s, curv](double at) {
        return 1.0 / (at * at) * std::pow(s, 2.5) / (up * up * up) * kE4 -
               cplx(0.0, kPi) * at * curv * up * up / (s * s * s);
    };
    return out;
}

StripConstants strip_constants(const ShearProfile& profile) {
    if (profile.domain() != FlowDomain::strip)
        throw std::domain_error("strip_constants: strip profile required");
    StripConstants out;
    auto usq = [&](double y) {
        const cplx u = profile(cplx(y)).u;
        return u * u;
    };
    out.j2_at_zero = gauss16(usq, 0.0, 1.0).real();
    out.wall_slope = profile.wall_slope();
    out.wall_curv = profile(cplx(1.0)).ddu.real();
    return out;
}

BranchPrediction strip_prediction(const ShearProfile& profile, double nu) {
    if (profile.domain() != FlowDomain::strip)
        throw std::domain_error("strip_prediction: wrong profile domain");
    if (!(nu > 0.0)) throw std::domain_error("strip_prediction: nu must be positive");
    const StripConstants sc = strip_constants(profile);
    const double s = std::abs(sc.wall_slope);
    const double curv = std::abs(sc.wall_curv);
    const double j2 = sc.j2_at_zero;

    BranchPrediction out;
    out.nu = nu;
    out.lower_exponent = 1.0 / 7.0;
    out.upper_exponent = 1.0 / 11.0;
    out.sigma_tilde_exponent = 2.0 / 11.0;
    out.alpha_minus =
        kLowerPrefactorStrip * std::pow(s, 5.0 / 7.0) * std::pow(j2, -3.0 / 7.0) * std::pow(nu, 1.0 / 7.0);
    out.alpha_plus = std::pow(2.0 * kPi * kPi, -1.0 / 11.0) * s * std::pow(curv, -2.0 / 11.0) *
                     std::pow(j2, -5.0 / 11.0) * std::pow(nu, 1.0 / 11.0);
    out.c_lower = [j2, s](double alpha) { return cplx(kLowerSpeedStrip * alpha * alpha * j2 / s); };
    out.sigma = [j2, s, curv](double alpha, double nu_) {
        return std::sqrt(nu_) / std::pow(alpha, 3.5) * std::pow(s, 2.5) / std::pow(j2, 1.5) * kE4 -
               cplx(0.0, kPi) * alpha * alpha * j2 * curv / (s * s * s);
    };
    auto sigma_copy = out.sigma;
    out.c_upper = [j2, s, nu, sigma_copy](double alpha) {
        return alpha * alpha * j2 / s * (1.0 + sigma_copy(alpha, nu));
    };
    out.sigma_tilde = [j2, s, curv](double at) {
        return std::pow(at, -3.5) * std::pow(s, 2.5) / std::pow(j2, 1.5) * kE4 -
               cplx(0.0, kPi) * at * at * j2 * curv / (s * s * s);
    };
    return out;
}

LowerBranchSolution lower_branch_relation(const ShearProfile& profile, double alpha_tilde) {
    if (profile.domain() != FlowDomain::half_space)
        throw std::domain_error("lower_branch_relation: half-space profile required");
    if (!(alpha_tilde > 0.0)) throw std::domain_error("lower_branch_relation: alpha_tilde must be positive");
    const double up = profile.u_plus();
    const double s = profile.wall_slope();
    auto f = [&](cplx ct) {
        const cplx z = std::pow(alpha_tilde, 1.0 / 3.0) * ct / std::pow(s, 2.0 / 3.0);
        return tietjens_direct(z) - (1.0 - alpha_tilde / ct * up * up / s);
    };
    cplx x0 = kLowerSpeedHalf * up * up / s * alpha_tilde;
    if (alpha_tilde > 4.0) {
        // the z0 branch has left the picture; seed with the sigma closure
        const cplx sg = kE4 * std::pow(s, 2.5) / (alpha_tilde * alpha_tilde * up * up * up);
        x0 = up * up / s * alpha_tilde * (1.0 + sg);
    }
    cplx x1 = x0 * (1.0 + 1e-5);
    cplx f0 = f(x0), f1 = f(x1);
    LowerBranchSolution out;
    for (int it = 0; it < 100; ++it) {
        if (f0 == f1) break;
        cplx step = -f1 * (x1 - x0) / (f1 - f0);
        if (std::abs(step) > 0.5 * std::abs(x1)) step *= 0.5 * std::abs(x1) / std::abs(step);
        x0 = x1;
        f0 = f1;
        x1 += step;
        f1 = f(x1);
        if (std::abs(f1) < 1e-12 && std::abs(step) < 1e-12 * std::abs(x1)) {
            out.converged = true;
            break;
        }
    }
    out.c_tilde = x1;
    out.residual = std::abs(f1);
    return out;
}

}  // namespace tsdisp
