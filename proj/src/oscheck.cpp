#include "tsdisp/oscheck.hpp"

#include <cmath>
#include <stdexcept>

#include "tsdisp/ode.hpp"

namespace tsdisp {

namespace {

using State = std::array<cplx, 6>;  // (m12, m13, m14, m23, m24, m34)

struct MinorSystem {
    const ShearProfile* profile;
    double alpha;
    double nu;
    cplx c;
    cplx shift;  // subtracted from the diagonal to remove the bulk exponential

    void operator()(double y, const State& m, State& d) const {
        const ProfileValue pv = (*profile)(cplx(y));
        const cplx ia_nu = cplx(0.0, alpha) / nu;
        const cplx a2 = 2.0 * alpha * alpha + ia_nu * (pv.u - c);
        const cplx a0 = -std::pow(alpha, 4) - ia_nu * ((pv.u - c) * alpha * alpha + pv.ddu);
        d[0] = m[1];
        d[1] = m[2] + m[3];
        d[2] = a2 * m[1] + m[4];
        d[3] = m[4];
        d[4] = m[5] - a0 * m[0] + a2 * m[3];
        d[5] = -a0 * m[1];
        for (int i = 0; i < 6; ++i) d[i] -= shift * m[i];
    }
};

double inf_norm(const State& m) {
    double n = 0.0;
    for (const cplx& v : m) n = std::max(n, std::abs(v));
    return n;
}

}  // namespace

OSDeterminant os_determinant(const ShearProfile& profile, double alpha, double nu, cplx c,
                             double rescale_interval, double init_scale) {
    if (nu < 1e-8) throw std::domain_error("os_determinant: nu below the stiffness envelope (1e-8)");
    if (!(alpha > 0.0)) throw std::domain_error("os_determinant: alpha must be positive");

    OSDeterminant out;
    out.lambda_s = cplx(std::abs(alpha));
    out.lambda_f = std::sqrt(cplx(alpha * alpha) + cplx(0.0, alpha) * profile.u_plus() / nu);

    const bool half = profile.domain() == FlowDomain::half_space;
    MinorSystem sys{&profile, alpha, nu, c, cplx(0.0)};

    State m{};
    double y0, y1;
    if (half) {
        // exact decay rates at the far field, c included
        const cplx ls = cplx(std::abs(alpha));
        const cplx lf = std::sqrt(cplx(alpha * alpha) + cplx(0.0, alpha) * (profile.u_plus() - c) / nu);
        sys.shift = -(ls + lf);  // integrating downward: d/dy picks up +(ls+lf)
        y0 = std::max(profile.far_field(), 30.0);
        y1 = 0.0;
        m = {cplx(1.0),
             -(ls + lf),
             ls * ls + ls * lf + lf * lf,
             ls * lf,
             -ls * lf * (ls + lf),
             ls * ls * lf * lf};
        for (auto& v : m) v *= init_scale;
    } else {
        // even modes: psi'(0) = psi'''(0) = 0; the free pair is (psi, psi'')(0)
        y0 = 0.0;
        y1 = 1.0;
        m = {cplx(0.0), cplx(init_scale), cplx(0.0), cplx(0.0), cplx(0.0), cplx(0.0)};
    }
    out.integration_span = std::abs(y1 - y0);

    double log_scale = 0.0;
    double next_checkpoint = half ? y0 - rescale_interval : y0 + rescale_interval;
    OdeOptions<6> opt;
    opt.abs_tol = 1e-13;
    opt.rel_tol = 1e-11;
    opt.on_step = [&](double y, State& s) {
        const bool crossed = half ? (y <= next_checkpoint) : (y >= next_checkpoint);
        const double n = inf_norm(s);
        if (crossed || n > 1e120 || (n < 1e-120 && n > 0.0)) {
            if (n == 0.0) return true;
            for (auto& v : s) v /= n;
            log_scale += std::log(n);
            while (half ? (y <= next_checkpoint) : (y >= next_checkpoint))
                next_checkpoint += half ? -rescale_interval : rescale_interval;
        }
        return true;
    };

    const auto r = integrate_ode<6>(sys, m, y0, y1, opt);
    if (!r.completed) throw std::runtime_error("os_determinant: integration failed");
    out.steps = r.steps;
    out.wall_minors = r.state;
    out.raw_minor = r.state[0];
    out.log_scale = log_scale;
    if (r.state[5] == cplx(0.0)) throw std::runtime_error("os_determinant: degenerate reference minor");
    out.value = r.state[0] / r.state[5];
    return out;
}

FlowPoint os_eigenvalue(const ShearProfile& profile, double alpha, double nu, cplx seed) {
    FlowPoint out;
    out.alpha = alpha;
    out.nu = nu;

    auto f = [&](cplx c) { return os_determinant(profile, alpha, nu, c).value; };
    cplx x0 = seed;
    cplx x1 = seed * (1.0 + 1e-5) + cplx(0.0, 1e-8 * std::abs(seed));
    cplx f0, f1;
    try {
        f0 = f(x0);
        f1 = f(x1);
    } catch (const std::exception&) {
        out.c = seed;
        out.residual_norm = 1e300;
        return out;
    }
    int it = 0;
    for (; it < 60; ++it) {
        if (f0 == f1) break;
        cplx step = -f1 * (x1 - x0) / (f1 - f0);
        if (std::abs(step) > 0.3 * std::abs(x1)) step *= 0.3 * std::abs(x1) / std::abs(step);
        x0 = x1;
        f0 = f1;
        x1 += step;
        try {
            f1 = f(x1);
        } catch (const std::exception&) {
            break;
        }
        if (std::abs(step) < 1e-10) {
            out.converged = true;
            break;
        }
    }
    out.c = x1;
    out.iterations = it;
    out.residual_norm = std::abs(f1);
    out.growth_rate = alpha * x1.imag();
    try {
        out.critical = critical_layer(profile, x1, alpha, nu);
    } catch (const std::exception&) {
    }
    return out;
}

}  // namespace tsdisp
