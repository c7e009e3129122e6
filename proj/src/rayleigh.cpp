#include "tsdisp/rayleigh.hpp"

#include <cmath>
#include <stdexcept>

#include "tsdisp/ode.hpp"

namespace tsdisp {
namespace rayleigh {

namespace {

constexpr double kPi = 3.14159265358979323846;

double half_space_ymax(const ShearProfile& p) {
    return std::max(30.0, 10.0 / p.decay_rate());  // D8 tail truncation
}

cplx bracket_integrand(const ShearProfile& p, cplx c, cplx z) {
    const cplx uc = p(z).u - c;
    const cplx up = p.u_plus() - c;
    const cplx r = uc / up;
    return r * r - 1.0 / (r * r);
}

// Piecewise-linear contour from 0 to `right_end`, displaced to Im z = rho
// (signed) on a window around x_c.  The critical layer must stay on the far
// side of the displaced section for the integral to be the continuation from
// Im c > 0: below the axis for the half space (rho < 0), above it for the
// strip (rho > 0).
std::vector<cplx> shifted_contour(double x_c, double rho, double right_end) {
    const double w = std::max(0.3, 2.0 * std::abs(rho));
    const double a = x_c - w;
    const double b = x_c + w;
    std::vector<cplx> v;
    v.emplace_back(0.0, 0.0);
    if (a > 1e-3) {
        v.emplace_back(a, 0.0);
        v.emplace_back(a, rho);
    } else {
        v.emplace_back(0.0, rho);
    }
    if (b < right_end - 1e-9) {
        v.emplace_back(b, rho);
        v.emplace_back(b, 0.0);
        v.emplace_back(right_end, 0.0);
    } else {
        v.emplace_back(right_end, rho);
        v.emplace_back(right_end, 0.0);
    }
    return v;
}

}  // namespace

OuterCorrection outer_correction(const ShearProfile& profile, cplx c) {
    if (profile.domain() != FlowDomain::half_space)
        throw std::domain_error("outer_correction: half-space profile required");
    if (c.imag() == 0.0)
        throw std::domain_error("outer_correction: Im c must be nonzero (use the limit formulas)");
    const double ymax = half_space_ymax(profile);
    double min_dist = 1e300;
    auto f = [&](double z) {
        const cplx uc = profile(cplx(z)).u - c;
        min_dist = std::min(min_dist, std::abs(uc));
        const cplx up = profile.u_plus() - c;
        const cplx r = uc / up;
        return r * r - 1.0 / (r * r);
    };
    const QuadResult q = integrate_adaptive(f, 0.0, ymax, 1e-10, 1e-10);
    if (min_dist < 1e-6) throw std::domain_error("outer_correction: integrand too close to the critical layer");
    if (!q.converged) throw std::runtime_error("outer_correction: quadrature did not converge");
    const cplx up = profile.u_plus() - c;
    return {-q.value / (up * up), q.error_estimate};
}

cplx outer_correction_continued(const ShearProfile& profile, cplx c) {
    if (profile.domain() != FlowDomain::half_space)
        throw std::domain_error("outer_correction_continued: half-space profile required");
    const CriticalLayerData cl = critical_layer(profile, c, 1.0, 1.0);
    const double rho = std::clamp(-2.0 * cl.y_c.imag(), 0.25, 0.8);
    if (cl.y_c.imag() < -0.8 * rho)
        throw std::domain_error("outer_correction_continued: critical layer below the contour window");
    const double ymax = half_space_ymax(profile);
    const auto verts = shifted_contour(cl.y_c.real(), -rho, ymax);
    auto f = [&](cplx z) { return bracket_integrand(profile, c, z); };
    const QuadResult q = integrate_contour(f, verts, 1e-11, 1e-11);
    if (!q.converged) throw std::runtime_error("outer_correction_continued: quadrature did not converge");
    const cplx up = profile.u_plus() - c;
    return -q.value / (up * up);
}

OuterLimits outer_correction_limits(const ShearProfile& profile, double c) {
    if (profile.domain() != FlowDomain::half_space)
        throw std::domain_error("outer_correction_limits: half-space profile required");
    const CriticalLayerData cl = critical_layer(profile, cplx(c), 1.0, 1.0);
    const ProfileValue pv = profile(cl.y_c);
    const double up1 = pv.du.real();
    const double up2 = pv.ddu.real();
    OuterLimits out;
    out.im_limit = cplx(0.0, -kPi * up2 / (up1 * up1 * up1));
    out.re_leading = -1.0 / (up1 * up1 * cl.y_c.real());
    return out;
}

namespace {

cplx omega2_eval(const ShearProfile& p, cplx c, cplx z) {
    auto f = [&](cplx t) {
        const cplx uc = p(t).u - c;
        return uc * uc;
    };
    return -gauss16_path(f, cplx(0.0), z);
}

}  // namespace

cplx strip_j4_continued(const ShearProfile& profile, cplx c) {
    if (profile.domain() != FlowDomain::strip)
        throw std::domain_error("strip_j4_continued: strip profile required");
    const CriticalLayerData cl = critical_layer(profile, c, 1.0, 1.0);
    // Im y_c has the opposite sign of Im c here, so the contour is raised and
    // the critical layer must stay below it.
    const double rho = std::clamp(2.0 * cl.y_c.imag(), 0.15, 0.6);
    if (cl.y_c.imag() > 0.8 * rho)
        throw std::domain_error("strip_j4_continued: critical layer above the contour window");
    if (cl.y_c.real() >= 1.0)
        throw std::domain_error("strip_j4_continued: critical layer outside the strip");
    const auto verts = shifted_contour(cl.y_c.real(), rho, 1.0);
    auto f = [&](cplx z) {
        const cplx w2 = omega2_eval(profile, c, z);
        const cplx uc = profile(z).u - c;
        return w2 * w2 / (uc * uc);
    };
    const QuadResult q = integrate_contour(f, verts, 1e-11, 1e-11);
    if (!q.converged) throw std::runtime_error("strip_j4_continued: quadrature did not converge");
    return q.value;
}

StripIntegrals strip_integrals(const ShearProfile& profile, cplx c) {
    if (profile.domain() != FlowDomain::strip)
        throw std::domain_error("strip_integrals: strip profile required");
    StripIntegrals out;
    const ShearProfile* p = &profile;
    out.omega2 = [p, c](double y) { return omega2_eval(*p, c, cplx(y)); };
    auto ysq = [&](cplx t) {
        const cplx uc = profile(t).u - c;
        return uc * uc;
    };
    out.j2 = gauss16_path(ysq, cplx(0.0), cplx(1.0));
    out.omega2_at_1 = -out.j2;  // same nodes by construction
    if (c.imag() != 0.0) {
        double min_dist = 1e300;
        auto f = [&](double z) {
            const cplx w2 = omega2_eval(profile, c, cplx(z));
            const cplx uc = profile(cplx(z)).u - c;
            min_dist = std::min(min_dist, std::abs(uc));
            return w2 * w2 / (uc * uc);
        };
        const QuadResult q = integrate_adaptive(f, 0.0, 1.0, 1e-10, 1e-10);
        if (min_dist < 1e-6) throw std::domain_error("strip_integrals: integrand too close to the critical layer");
        if (!q.converged) throw std::runtime_error("strip_integrals: quadrature did not converge");
        out.j4 = q.value;
    } else if (c == cplx(0.0)) {
        // j2 and omega2 are regular at c = 0 but j4 diverges like 1/c
        out.j4 = cplx(std::nan(""), std::nan(""));
    } else {
        // real c: never integrate through the pole (D9); assemble j4 from the
        // limit formulas for int_0^1 = -I(c).
        auto f = [&](cplx z) {
            const cplx w2 = omega2_eval(profile, c, z);
            return w2 * w2;
        };
        auto fp = [&](cplx z) {
            const cplx uc = profile(z).u - c;
            return -2.0 * omega2_eval(profile, c, z) * uc * uc;
        };
        const IntegralLimits lim = integral_limits(profile, f, fp, c.real());
        out.j4 = cplx(-lim.re_leading, -lim.im_part);
    }
    out.omega4_at_1 = out.j4;
    return out;
}

IntegralLimits integral_limits(const ShearProfile& profile,
                               const std::function<cplx(cplx)>& f,
                               const std::function<cplx(cplx)>& fprime, double c) {
    if (profile.domain() != FlowDomain::strip)
        throw std::domain_error("integral_limits: strip profile required");
    const CriticalLayerData cl = critical_layer(profile, cplx(c), 1.0, 1.0);
    const ProfileValue pv = profile(cl.y_c);
    const double up1 = pv.du.real();
    const double up2 = pv.ddu.real();
    const double fy = f(cl.y_c).real();
    const double fpy = fprime(cl.y_c).real();
    IntegralLimits out;
    out.im_part = -kPi * up2 / (up1 * up1 * up1) * fy + kPi / (up1 * up1) * fpy;
    out.re_leading = -fy / (profile.wall_slope() * c);
    return out;
}

cplx integrate_strip_riccati(const ShearProfile& profile, cplx c, double alpha) {
    if (profile.domain() != FlowDomain::strip)
        throw std::domain_error("integrate_strip_riccati: strip profile required");
    if (c.imag() == 0.0)
        throw std::domain_error("integrate_strip_riccati: Im c must be nonzero");
    auto rhs = [&](double y, const std::array<cplx, 1>& s, std::array<cplx, 1>& d) {
        const cplx uc = profile(cplx(y)).u - c;
        const cplx Y = uc * uc;
        d[0] = -alpha * alpha * Y + s[0] * s[0] / Y;
    };
    OdeOptions<1> opt;
    opt.abs_tol = 1e-13;
    opt.rel_tol = 1e-12;
    const auto r = integrate_ode<1>(rhs, {cplx(0.0)}, 0.0, 1.0, opt);
    if (!r.completed) throw std::runtime_error("integrate_strip_riccati: integration failed");
    return r.state[0];
}

OuterRiccati integrate_outer_riccati(const ShearProfile& profile, cplx c, double alpha) {
    if (profile.domain() != FlowDomain::half_space)
        throw std::domain_error("integrate_outer_riccati: half-space profile required");
    if (c.imag() == 0.0)
        throw std::domain_error("integrate_outer_riccati: Im c must be nonzero");
    const double ymax = std::max(profile.far_field(), half_space_ymax(profile));
    const cplx up = profile.u_plus() - c;
    OuterRiccati out;
    auto rhs = [&](double y, const std::array<cplx, 1>& s, std::array<cplx, 1>& d) {
        const cplx uc = profile(cplx(y)).u - c;
        const cplx Y = uc * uc;
        d[0] = alpha * alpha * Y * s[0] * s[0] - 1.0 / Y;
    };
    OdeOptions<1> opt;
    opt.abs_tol = 1e-13;
    opt.rel_tol = 1e-12;
    double blow_y = 0.0;
    opt.on_step = [&](double y, std::array<cplx, 1>& s) {
        if (std::abs(s[0]) > 1e8) {
            blow_y = y;
            return false;
        }
        return true;
    };
    const auto r = integrate_ode<1>(rhs, {1.0 / (alpha * up * up)}, ymax, 0.0, opt);
    if (!r.completed) {
        out.blew_up = true;
        out.blowup_y = blow_y != 0.0 ? blow_y : r.y_end;
        out.value = r.state[0];
        return out;
    }
    out.value = r.state[0];
    return out;
}

}  // namespace rayleigh
}  // namespace tsdisp
