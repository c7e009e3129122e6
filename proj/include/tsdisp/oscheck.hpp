#pragma once

#include <array>

#include "tsdisp/dispersion.hpp"
#include "tsdisp/shear_profile.hpp"

namespace tsdisp {

/// Exact Orr-Sommerfeld boundary determinant evaluated with the compound
/// matrix method: the six 2x2 minors of the decaying solution pair are
/// integrated from the far field to the wall (half space) or from the
/// centerline to the wall (strip, even modes).
struct OSDeterminant {
    /// Scale-free determinant m12/m34 at the boundary; analytic in c and
    /// zero exactly at an eigenvalue.
    cplx value;
    /// The raw wall minor m12 under the running rescaling, with log_scale
    /// the accumulated natural log removed from it: raw determinant
    /// = raw_minor * exp(log_scale) up to the analytic far-field factor.
    cplx raw_minor;
    double log_scale = 0.0;
    cplx lambda_s;  // |alpha|
    cplx lambda_f;  // sqrt(alpha^2 + i alpha U+ / nu), principal branch
    double integration_span = 0.0;
    long steps = 0;
    std::array<cplx, 6> wall_minors{};  // (m12, m13, m14, m23, m24, m34), rescaled
};

/// Requires nu >= 1e-8 (double precision stiffness envelope).
/// `rescale_interval` sets the checkpoint spacing of the running
/// renormalization; the zero set must not depend on it.
/// `init_scale` multiplies the far-field initialization (linearity checks).
OSDeterminant os_determinant(const ShearProfile& profile, double alpha, double nu, cplx c,
                             double rescale_interval = 0.5, double init_scale = 1.0);

/// Secant hunt on the determinant from `seed`; converged when |dc| < 1e-10.
FlowPoint os_eigenvalue(const ShearProfile& profile, double alpha, double nu, cplx seed);

}  // namespace tsdisp
