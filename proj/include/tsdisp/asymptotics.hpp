#pragma once

#include <functional>

#include "tsdisp/shear_profile.hpp"

namespace tsdisp {

/// Closed-form marginal-curve predictions and branch expansions.  All "~"
/// relations are implemented as equalities, leading term only (D15); second
/// derivatives are taken at the wall (D16) and enter through their magnitude
/// (D13).
struct BranchPrediction {
    double nu = 0.0;
    double alpha_minus = 0.0;
    double alpha_plus = 0.0;
    std::function<cplx(double)> c_lower;          // alpha -> c on the z0 branch
    std::function<cplx(double)> c_upper;          // alpha -> c with the sigma correction
    std::function<cplx(double, double)> sigma;    // (alpha, nu) -> sigma
    std::function<cplx(double)> sigma_tilde;      // alpha_tilde -> sigma_tilde
    double lower_exponent = 0.0;                  // 1/4 (half space) or 1/7 (strip)
    double upper_exponent = 0.0;                  // 1/6 or 1/11
    double sigma_tilde_exponent = 0.0;            // sigma = nu^e sigma~: 1/6 or 2/11
};

BranchPrediction half_space_prediction(const ShearProfile& profile, double nu);
BranchPrediction strip_prediction(const ShearProfile& profile, double nu);

/// Profile constants entering the strip formulas.
struct StripConstants {
    double j2_at_zero;   // int_0^1 U_s^2
    double wall_slope;   // U'(1)
    double wall_curv;    // U''(1)
};
StripConstants strip_constants(const ShearProfile& profile);

/// Solve the rescaled lower-branch relation
///   Ti(alpha~^{1/3} c~ / U'^{2/3}) = 1 - (alpha~/c~) U+^2/U'
/// for c~ = c nu^{-1/4} at given alpha~ = alpha nu^{-1/4} (half space).
struct LowerBranchSolution {
    cplx c_tilde;
    bool converged = false;
    double residual = 0.0;
};
LowerBranchSolution lower_branch_relation(const ShearProfile& profile, double alpha_tilde);

/// Paper landmark constants.
inline constexpr double kLowerPrefactorHalf = 1.005;    // C_- of the half space
inline constexpr double kLowerPrefactorStrip = 1.7302;  // C_- of the strip
inline constexpr double kLowerSpeedHalf = 2.2959;       // c / alpha on the z0 branch
inline constexpr double kLowerSpeedStrip = 0.6392;      // c U'(1)/(alpha^2 omega2(1)) scale

}  // namespace tsdisp
