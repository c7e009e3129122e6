#include "tsdisp/shear_profile.hpp"

#include <cmath>
#include <stdexcept>

namespace tsdisp {

ShearProfile make_exponential_half_space(double u_plus) {
    if (u_plus == 0.0) throw std::domain_error("exponential profile: u_plus must be nonzero");
    auto eval = [u_plus](cplx y) -> ProfileValue {
        const cplx e = std::exp(-y);
        return {u_plus * (1.0 - e), u_plus * e, -u_plus * e};
    };
    // |U - u_plus| = |u_plus| e^{-y} < 1e-12 |u_plus| at y = 27.7
    return {FlowDomain::half_space, "exponential", eval, u_plus, u_plus, 1.0, 28.0};
}

ShearProfile make_parabolic_strip() {
    auto eval = [](cplx y) -> ProfileValue { return {1.0 - y * y, -2.0 * y, cplx(-2.0)}; };
    return {FlowDomain::strip, "parabolic", eval, 0.0, -2.0, 0.0, 1.0};
}

CriticalLayerData critical_layer(const ShearProfile& profile, cplx c, double alpha, double nu) {
    if (std::abs(c) == 0.0) throw std::domain_error("critical_layer: c must be nonzero");
    const double wall = profile.wall();
    cplx y = wall + c / profile.wall_slope();
    bool ok = false;
    for (int attempt = 0; attempt < 2 && !ok; ++attempt) {
        if (attempt == 1) y = wall + 0.5 * c / profile.wall_slope();  // damped restart (D7)
        for (int it = 0; it < 50; ++it) {
            const ProfileValue pv = profile(y);
            const cplx r = pv.u - c;
            if (std::abs(r) <= 1e-12 * std::abs(c)) {
                ok = true;
                break;
            }
            cplx step = r / pv.du;
            if (attempt == 1) step *= 0.5;
            y -= step;
        }
    }
    if (!ok) throw std::runtime_error("critical_layer: no critical layer (Newton did not converge)");

    const double sign = profile.domain() == FlowDomain::half_space ? 1.0 : -1.0;
    const cplx slope_c = profile(y).du;
    CriticalLayerData out;
    out.y_c = y;
    out.gamma_tilde = std::pow(alpha * sign * slope_c / nu, 1.0 / 3.0);
    out.lambda_big = profile.wall_slope() * (y - wall) / c;
    return out;
}

}  // namespace tsdisp
