#include "tsdisp/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tsdisp/asymptotics.hpp"
#include "tsdisp/tietjens.hpp"

namespace tsdisp {



ResidualEval residual_half(const ShearProfile& profile, double alpha, double nu, cplx c) {
    const CriticalLayerData cl = critical_layer(profile, c, alpha, nu);
    const double up = profile.u_plus();
    const double slope0 = profile.wall_slope();
    const cplx upc = up - c;

    cplx omega0;
    if (c.imag() == 0.0) {
        const rayleigh::OuterLimits lim = rayleigh::outer_correction_limits(profile, c.real());
        omega0 = lim.re_leading + lim.im_limit;
    } else {
        omega0 = rayleigh::outer_correction_continued(profile, c);
    }

    ResidualEval out;
    out.lhs = cl.lambda_big * tietjens_direct(cl.gamma_tilde * cl.y_c);
    out.parts = {cplx(1.0),
                 -(alpha / c) * upc * upc / slope0,
                 (alpha * alpha / c) * upc * upc * upc * upc / slope0 *
                     (1.0 / (slope0 * c) + omega0)};
    out.rhs = out.parts[0] + out.parts[1] + out.parts[2];
    out.value = out.lhs - out.rhs;
    return out;
}

ResidualEval residual_strip(const ShearProfile& profile, double alpha, double nu, cplx c) {
    const CriticalLayerData cl = critical_layer(profile, c, alpha, nu);
    const double slope1 = profile.wall_slope();  // U'(1) < 0
    const double a2 = alpha * alpha;
    const double a4 = a2 * a2;

    auto ysq = [&](cplx t) {
        const cplx uc = profile(t).u - c;
        return uc * uc;
    };
    const cplx j2 = gauss16_path(ysq, cplx(0.0), cplx(1.0));
    const cplx j4 = (c.imag() == 0.0) ? rayleigh::strip_integrals(profile, c).j4
                                      : rayleigh::strip_j4_continued(profile, c);

    ResidualEval out;
    out.lhs = cl.lambda_big * tietjens_direct(cl.gamma_tilde * (1.0 - cl.y_c));
    out.parts = {cplx(1.0),
                 a2 / (slope1 * c) * j2,
                 -a4 / (slope1 * c) * j4,
                 a4 / (slope1 * slope1 * c * c) * j2 * j2};
    out.rhs = out.parts[0] + out.parts[1] + out.parts[2] + out.parts[3];
    out.value = out.lhs - out.rhs;
    return out;
}

ResidualEval residual(const ShearProfile& profile, double alpha, double nu, cplx c) {
    return profile.domain() == FlowDomain::half_space ? residual_half(profile, alpha, nu, c)
                                                      : residual_strip(profile, alpha, nu, c);
}

FlowPoint solve_c(const ShearProfile& profile, double alpha, double nu, cplx guess,
                  const SolverOptions& opts) {
    FlowPoint out;
    out.alpha = alpha;
    out.nu = nu;

    cplx x0 = guess;
    cplx x1 = guess * (1.0 + 1e-5) + cplx(0.0, 1e-9 * std::abs(guess));
    cplx f0, f1;
    try {
        f0 = residual(profile, alpha, nu, x0).value;
        f1 = residual(profile, alpha, nu, x1).value;
    } catch (const std::exception&) {
        out.c = guess;
        out.converged = false;
        out.residual_norm = 1e300;
        return out;
    }
    cplx best_x = std::abs(f0) < std::abs(f1) ? x0 : x1;
    double best_f = std::min(std::abs(f0), std::abs(f1));

    int it = 0;
    for (; it < opts.max_iterations; ++it) {
        if (f1 == f0) break;
        cplx step = -f1 * (x1 - x0) / (f1 - f0);
        const double cap = 0.5 * std::abs(x1);
        if (std::abs(step) > cap) step *= cap / std::abs(step);
        const cplx x2 = x1 + step;
        cplx f2;
        try {
            f2 = residual(profile, alpha, nu, x2).value;
        } catch (const std::exception&) {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        if (std::abs(f1) < best_f) {
            best_f = std::abs(f1);
            best_x = x1;
        }
        if (std::abs(f1) < opts.residual_tol && std::abs(step) < opts.step_tol * std::abs(x1)) {
            out.converged = true;
            break;
        }
    }
    out.c = out.converged ? x1 : best_x;
    out.residual_norm = out.converged ? std::abs(f1) : best_f;
    out.iterations = it;
    out.growth_rate = alpha * out.c.imag();
    try {
        out.critical = critical_layer(profile, out.c, alpha, nu);
    } catch (const std::exception&) {
        out.converged = false;
    }
    return out;
}

std::vector<FlowPoint> sweep_alpha(const ShearProfile& profile, double nu,
                                   std::span<const double> alphas, cplx seed,
                                   const SolverOptions& opts) {
    std::vector<FlowPoint> out;
    out.reserve(alphas.size());
    cplx current_seed = seed;
    int failures = 0;
    for (const double a : alphas) {
        FlowPoint pt = solve_c(profile, a, nu, current_seed, opts);
        if (pt.converged) {
            current_seed = pt.c;
        } else {
            ++failures;
        }
        out.push_back(std::move(pt));
    }
    if (failures * 2 > static_cast<int>(alphas.size()))
        throw std::runtime_error("sweep_alpha: more than half of the grid failed to converge");
    return out;
}

std::vector<double> make_alpha_grid(const ShearProfile& profile, double nu, const SweepGrid& grid) {
    const BranchPrediction pred = profile.domain() == FlowDomain::half_space
                                      ? half_space_prediction(profile, nu)
                                      : strip_prediction(profile, nu);
    const double lo = grid.min_scale * pred.alpha_minus;
    const double hi = grid.max_scale * pred.alpha_plus;
    std::vector<double> alphas(grid.count);
    for (int i = 0; i < grid.count; ++i) {
        const double t = grid.count == 1 ? 0.0 : static_cast<double>(i) / (grid.count - 1);
        alphas[i] = grid.log_spacing ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo);
    }
    return alphas;
}

namespace {

cplx lower_branch_seed(const ShearProfile& profile, double alpha) {
    // wave speed of the z -> z0 branch; the mirror-corrected strip constant
    // is 1/(1 - Ti(z0)) like the half space.
    if (profile.domain() == FlowDomain::half_space) {
        const double up = profile.u_plus();
        return 2.29572 * up * up / profile.wall_slope() * alpha;
    }
    const StripConstants sc = strip_constants(profile);
    return 2.29572 * alpha * alpha * sc.j2_at_zero / std::abs(profile.wall_slope());
}

// Bisect Im c = 0 between two converged points of the sweep.
FlowPoint bisect_neutral(const ShearProfile& profile, double nu, FlowPoint lo, FlowPoint hi,
                         const SolverOptions& opts) {
    for (int i = 0; i < 80; ++i) {
        if (hi.alpha / lo.alpha - 1.0 < 1e-6) break;
        const double amid = std::sqrt(lo.alpha * hi.alpha);
        const cplx seed = (std::abs(amid - lo.alpha) < std::abs(hi.alpha - amid)) ? lo.c : hi.c;
        FlowPoint mid = solve_c(profile, amid, nu, seed, opts);
        if (!mid.converged) {
            // retry from the other side before giving up on the bracket
            mid = solve_c(profile, amid, nu, seed == lo.c ? hi.c : lo.c, opts);
            if (!mid.converged) break;
        }
        if ((mid.c.imag() > 0.0) == (lo.c.imag() > 0.0))
            lo = mid;
        else
            hi = mid;
    }
    return (std::abs(lo.c.imag()) < std::abs(hi.c.imag())) ? lo : hi;
}

}  // namespace

NeutralPoints neutral_points(const ShearProfile& profile, double nu, const SweepGrid& grid,
                             const SolverOptions& opts) {
    const std::vector<double> alphas = make_alpha_grid(profile, nu, grid);
    const cplx seed = lower_branch_seed(profile, alphas.front());
    NeutralPoints out;
    out.sweep = sweep_alpha(profile, nu, alphas, seed, opts);

    // locate the sign changes of Im c among converged neighbours
    int first = -1, second = -1;
    for (size_t i = 0; i + 1 < out.sweep.size(); ++i) {
        const FlowPoint& a = out.sweep[i];
        const FlowPoint& b = out.sweep[i + 1];
        if (!a.converged || !b.converged) continue;
        if ((a.c.imag() > 0.0) != (b.c.imag() > 0.0)) {
            if (first < 0)
                first = static_cast<int>(i);
            else if (second < 0)
                second = static_cast<int>(i);
        }
    }
    if (first < 0) throw std::runtime_error("neutral_points: no unstable band on the sweep grid");
    if (second < 0) throw std::runtime_error("neutral_points: band does not close on the sweep grid");

    out.lower = bisect_neutral(profile, nu, out.sweep[first], out.sweep[first + 1], opts);
    out.upper = bisect_neutral(profile, nu, out.sweep[second], out.sweep[second + 1], opts);

    // diagnostic: residual of the real-c relation at the located endpoints (D9)
    auto real_residual = [&](const FlowPoint& p) {
        try {
            return std::abs(residual(profile, p.alpha, nu, cplx(p.c.real())).value);
        } catch (const std::exception&) {
            return 1e300;
        }
    };
    out.real_axis_residual_lower = real_residual(out.lower);
    out.real_axis_residual_upper = real_residual(out.upper);
    return out;
}

}  // namespace tsdisp
