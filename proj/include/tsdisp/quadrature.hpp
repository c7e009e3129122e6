#pragma once

#include <functional>
#include <vector>

#include "tsdisp/complex_airy.hpp"

namespace tsdisp {

struct QuadResult {
    cplx value;
    double error_estimate = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod 7-15 over a real interval, complex-valued integrand.
/// Splits the worst interval until the summed error estimate meets
/// max(abs_tol, rel_tol * |value|) or the interval budget runs out.
QuadResult integrate_adaptive(const std::function<cplx(double)>& f, double a, double b,
                              double abs_tol = 1e-10, double rel_tol = 1e-10,
                              int max_intervals = 4000);

/// Fixed 16-point Gauss-Legendre panel; exact for polynomial integrands of
/// degree <= 31 and near machine precision for entire integrands on O(1) spans.
cplx gauss16(const std::function<cplx(double)>& f, double a, double b);

/// Same rule along the straight segment from za to zb in the complex plane.
cplx gauss16_path(const std::function<cplx(cplx)>& f, cplx za, cplx zb);

/// Integrate f(z) dz along the piecewise-linear contour through `vertices`,
/// each segment handled by the adaptive rule.
QuadResult integrate_contour(const std::function<cplx(cplx)>& f,
                             const std::vector<cplx>& vertices,
                             double abs_tol = 1e-10, double rel_tol = 1e-10);

}  // namespace tsdisp
