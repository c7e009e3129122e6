#include <cstdio>

#include "tsdisp/asymptotics.hpp"
#include "tsdisp/dispersion.hpp"
#include "tsdisp/oscheck.hpp"

using namespace tsdisp;

int main(int argc, char** argv) {
    const ShearProfile exp_p = make_exponential_half_space(1.0);
    const double nu = argc > 1 ? std::atof(argv[1]) : 1e-6;
    const BranchPrediction pred = half_space_prediction(exp_p, nu);
    const double a = std::sqrt(pred.alpha_minus * pred.alpha_plus);
    const FlowPoint disp = solve_c(exp_p, a, nu, pred.c_lower(a));
    std::printf("nu=%g alpha=%g c_disp=%.10g%+.10gi\n", nu, a, disp.c.real(), disp.c.imag());
    for (double t = 0.7; t <= 1.35; t += 0.05) {
        const cplx c = disp.c * t;
        const OSDeterminant d = os_determinant(exp_p, a, nu, c);
        std::printf("  t=%.2f  v=%+.3e%+.3ei ", t, d.value.real(), d.value.imag());
        for (int k = 0; k < 6; ++k) std::printf(" m%d=%.2e", k, std::abs(d.wall_minors[k]));
        std::printf("\n");
    }
    return 0;
}
