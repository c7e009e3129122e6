#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "tsdisp/complex_airy.hpp"

namespace tsdisp {

/// Dormand-Prince 5(4) for small complex systems.  `rhs(y, state, dstate)`;
/// integrates from y0 to y1 (either direction).  `on_step`, when set, is
/// called after every accepted step and may rescale the state in place; it
/// returns false to abort the integration early.
template <std::size_t N>
struct OdeOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    double initial_step = 0.0;  // 0: automatic
    long max_steps = 4000000;
    std::function<bool(double, std::array<cplx, N>&)> on_step;
};

template <std::size_t N>
struct OdeOutcome {
    std::array<cplx, N> state;
    double y_end = 0.0;
    long steps = 0;
    bool completed = false;
};

template <std::size_t N, class Rhs>
OdeOutcome<N> integrate_ode(Rhs&& rhs, std::array<cplx, N> state, double y0, double y1,
                            const OdeOptions<N>& opt = {}) {
    using State = std::array<cplx, N>;
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    OdeOutcome<N> out;
    const double dir = (y1 >= y0) ? 1.0 : -1.0;
    double y = y0;
    double span = std::abs(y1 - y0);
    if (span == 0.0) {
        out.state = state;
        out.y_end = y0;
        out.completed = true;
        return out;
    }
    double h = opt.initial_step > 0.0 ? opt.initial_step : span / 100.0;
    h = std::min(h, span);

    State k1, k2, k3, k4, k5, k6, k7, tmp, y5;
    rhs(y, state, k1);
    for (long step = 0; step < opt.max_steps; ++step) {
        if (std::abs(y - y0) >= span) break;
        h = std::min(h, span - std::abs(y - y0));
        const double hs = dir * h;
        for (std::size_t i = 0; i < N; ++i) tmp[i] = state[i] + hs * a21 * k1[i];
        rhs(y + c2 * hs, tmp, k2);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = state[i] + hs * (a31 * k1[i] + a32 * k2[i]);
        rhs(y + c3 * hs, tmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = state[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(y + c4 * hs, tmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = state[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(y + c5 * hs, tmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = state[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(y + hs, tmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            y5[i] = state[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(y + hs, y5, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const cplx e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = opt.abs_tol + opt.rel_tol * std::max(std::abs(state[i]), std::abs(y5[i]));
            const double q = std::abs(e) / sc;
            err = std::max(err, q);
        }
        if (err <= 1.0) {
            y += hs;
            state = y5;
            k1 = k7;  // FSAL
            ++out.steps;
            if (opt.on_step && !opt.on_step(y, state)) {
                out.state = state;
                out.y_end = y;
                out.completed = false;
                return out;
            }
        }
        const double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(fac, 0.2, 5.0);
        if (h < 1e-14 * span) throw std::runtime_error("integrate_ode: step size underflow");
        if (err <= 1.0 && opt.on_step) rhs(y, state, k1);  // state may have been rescaled
    }
    out.state = state;
    out.y_end = y;
    out.completed = std::abs(y - y0) >= span * (1.0 - 1e-12);
    return out;
}

}  // namespace tsdisp
