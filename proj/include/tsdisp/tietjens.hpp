#pragma once

#include "tsdisp/complex_airy.hpp"

namespace tsdisp {

enum class TiRegime { direct, asymptotic };

struct TietjensSample {
    double y;
    cplx value;
    TiRegime regime;
};

/// The unique real zero of Im Ti on the positive axis and Ti there.
struct TietjensZero {
    double z0;
    double ti_at_z0;
};

/// Ti(w) = ai2(xi) / (xi ai1(xi)) with xi = -e^{i pi/6} w, continued to
/// complex w.  Throws std::domain_error near the pole xi ai1(xi) = 0.
cplx tietjens_direct(cplx w);

/// Partial sums of the expansion at infinity,
///   Ti(y) = e^{i pi/4} y^{-3/2} (1 + 5/4 e^{i pi/4} y^{-3/2}
///           + 151/32 e^{i pi/2} y^{-3} + ...),   terms in {1,2,3}.
cplx tietjens_asymptotic(double y, int terms);

/// Sample Ti on the positive real axis.  Below y = 8 the value is the direct
/// Airy-quotient evaluation; from y = 8 on, the 3-term expansion.
TietjensSample tietjens(double y);

/// Bisection + secant polish of Im Ti over (2.0, 2.6).
TietjensZero tietjens_real_zero();

}  // namespace tsdisp
