#pragma once

#include <complex>

namespace tsdisp {

using cplx = std::complex<double>;

/// Ai together with its first and second primitives normalized to vanish
/// at +infinity:  ai1' = ai,  ai2' = ai1,  ai1 = -int_z^inf Ai,
/// ai2 = int_z^inf (t - z) Ai(t) dt.
struct AiryTriple {
    cplx ai;
    cplx ai1;
    cplx ai2;
};

/// Evaluate Ai(z) and both primitives anywhere in the complex plane.
/// Double precision throughout; throws std::overflow_error when the
/// dominant exponential exceeds the double range.
AiryTriple airy_triple(cplx z);

/// Ai(z) alone.
cplx airy(cplx z);

namespace detail {
// Exposed for the overlap tests in the test suite: force one particular
// evaluation path regardless of where z lies.
AiryTriple airy_maclaurin(cplx z);
AiryTriple airy_asymptotic(cplx z);
AiryTriple airy_marched(cplx z, double anchor_radius);
}  // namespace detail

}  // namespace tsdisp
