#pragma once

#include <span>
#include <vector>

#include "tsdisp/rayleigh.hpp"
#include "tsdisp/shear_profile.hpp"

namespace tsdisp {

struct FlowPoint {
    double alpha = 0.0;
    double nu = 0.0;
    cplx c;
    CriticalLayerData critical;
    double growth_rate = 0.0;    // alpha * Im c
    double residual_norm = 0.0;  // |residual| at the returned c
    bool converged = false;
    int iterations = 0;
};

/// One evaluation of the asymptotic dispersion residual: value = lhs - rhs,
/// lhs the wall-layer term Lambda Ti, rhs the Rayleigh-side series; `parts`
/// are the individual rhs terms and sum to rhs exactly.
struct ResidualEval {
    cplx lhs;
    cplx rhs;
    cplx value;
    std::vector<cplx> parts;
};

/// Half-space relation: Lambda Ti(gamma~ y_c) = 1 - (alpha/c)(U+-c)^2/U'(0)
///   + (alpha^2/c)(U+-c)^4/U'(0) [ 1/(U'(0) c) + Omega_0(0,c) ].
/// For c off the real axis, Omega_0 is the contour-continued quadrature; for
/// exactly real c, the singular-limit formulas are used (D9).
ResidualEval residual_half(const ShearProfile& profile, double alpha, double nu, cplx c);

/// Strip relation: Lambda Ti(gamma~ (1-y_c)) = 1 + (alpha^2/(U'(1) c)) j2
///   - (alpha^4/(U'(1) c)) j4 + (alpha^4/(U'(1)^2 c^2)) j2^2.
/// This is the displayed strip relation with its overall sign corrected so
/// that the unstable Tollmien-Schlichting band exists; see the ledger note.
ResidualEval residual_strip(const ShearProfile& profile, double alpha, double nu, cplx c);

/// Dispatch on profile.domain().
ResidualEval residual(const ShearProfile& profile, double alpha, double nu, cplx c);

struct SolverOptions {
    double residual_tol = 1e-10;
    double step_tol = 1e-12;  // relative |dc| stop
    int max_iterations = 100;
};

/// Damped complex secant iteration on the residual.  Non-convergence is
/// reported through the flag, not thrown; callers must check.
FlowPoint solve_c(const ShearProfile& profile, double alpha, double nu, cplx guess,
                  const SolverOptions& opts = {});

/// Continuation sweep: each solve is seeded by the previous converged root.
/// Throws std::runtime_error if more than half of the grid fails.
std::vector<FlowPoint> sweep_alpha(const ShearProfile& profile, double nu,
                                   std::span<const double> alphas, cplx seed,
                                   const SolverOptions& opts = {});

struct SweepGrid {
    double min_scale = 0.1;  // multiplies the predicted alpha_-
    double max_scale = 10.0; // multiplies the predicted alpha_+
    int count = 64;
    bool log_spacing = true;
};

std::vector<double> make_alpha_grid(const ShearProfile& profile, double nu,
                                    const SweepGrid& grid = {});

/// Marginal-curve endpoints located by bisection on Im c between the two
/// sign changes of the coarse sweep.  Throws std::runtime_error when the
/// sweep finds no unstable interval.
struct NeutralPoints {
    FlowPoint lower;                // alpha_-
    FlowPoint upper;                // alpha_+
    std::vector<FlowPoint> sweep;   // the coarse continuation sweep
    double real_axis_residual_lower = 0.0;  // |residual| via the D9 real-c route
    double real_axis_residual_upper = 0.0;
};
NeutralPoints neutral_points(const ShearProfile& profile, double nu,
                             const SweepGrid& grid = {}, const SolverOptions& opts = {});

}  // namespace tsdisp
