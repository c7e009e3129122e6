#pragma once

#include <functional>

#include "tsdisp/quadrature.hpp"
#include "tsdisp/shear_profile.hpp"

namespace tsdisp {
namespace rayleigh {

/// Omega_0(0, c) for a half-space profile:
///   -(U+ - c)^{-2} int_0^inf [ (U-c)^2/(U+-c)^2 - (U+-c)^2/(U-c)^2 ] dz
/// by adaptive quadrature along the real axis.  Requires Im c != 0; throws
/// std::domain_error when the integrand approaches the critical-layer pole
/// (min |U - c| < 1e-6) and std::runtime_error when quadrature fails.
struct OuterCorrection {
    cplx value;
    double quadrature_error;
};
OuterCorrection outer_correction(const ShearProfile& profile, cplx c);

/// Same integral along a contour dipped below the critical layer.  Smooth in
/// c across the real axis and equal to the analytic continuation from
/// Im c > 0; this is what the dispersion solver consumes.
cplx outer_correction_continued(const ShearProfile& profile, cplx c);

/// Closed-form limits of Omega_0(0, c) as Im c -> 0+ for real 0 < c < U+:
///   Im -> -pi U_c'' / U_c'^3,   Re ~ -1/(U_c'^2 y_c).
/// im_limit is returned as the purely imaginary contribution i * Im.
struct OuterLimits {
    cplx im_limit;
    double re_leading;
};
OuterLimits outer_correction_limits(const ShearProfile& profile, double c);

/// Strip quantities of the slow expansion:
///   omega2(y) = -int_0^y (U-c)^2,   j2 = int_0^1 (U-c)^2,
///   j4 = int_0^1 omega2^2/(U-c)^2,  omega4(1) = j4.
/// For real c the singular j4 is evaluated through its limit formulas.
struct StripIntegrals {
    std::function<cplx(double)> omega2;
    cplx omega2_at_1;
    cplx omega4_at_1;
    cplx j2;
    cplx j4;
};
StripIntegrals strip_integrals(const ShearProfile& profile, cplx c);

/// j4 along the dipped contour (analytic continuation from Im c > 0).
cplx strip_j4_continued(const ShearProfile& profile, cplx c);

/// Limits of I(c) = int_1^0 f(z)/(U-c)^2 dz as Im c -> 0+ (strip):
///   Im I -> -pi (U_c''/U_c'^3) f(y_c) + (pi/U_c'^2) f'(y_c)
///   Re I ~ -f(y_c)/(U_1' c)
struct IntegralLimits {
    double im_part;
    double re_leading;
};
IntegralLimits integral_limits(const ShearProfile& profile,
                               const std::function<cplx(cplx)>& f,
                               const std::function<cplx(cplx)>& fprime, double c);

/// omega(1) from omega' = -alpha^2 Y + omega^2 / Y, omega(0) = 0 (strip).
cplx integrate_strip_riccati(const ShearProfile& profile, cplx c, double alpha);

/// Omega(0) from Omega' = alpha^2 Y Omega^2 - 1/Y integrated down from the
/// far field where Omega = 1/(alpha (U+-c)^2).  A Riccati pole between the
/// far field and the wall is reported, not thrown.
struct OuterRiccati {
    cplx value;
    bool blew_up = false;
    double blowup_y = 0.0;
};
OuterRiccati integrate_outer_riccati(const ShearProfile& profile, cplx c, double alpha);

}  // namespace rayleigh
}  // namespace tsdisp
