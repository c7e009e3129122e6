#pragma once

#include <functional>
#include <string>

#include "tsdisp/complex_airy.hpp"

namespace tsdisp {

enum class FlowDomain { half_space, strip };

struct ProfileValue {
    cplx u;    // U_s(y)
    cplx du;   // U_s'(y)
    cplx ddu;  // U_s''(y)
};

/// Analytic base flow.  The evaluator must accept complex y: the critical
/// layer sits off the real axis whenever Im c != 0.
class ShearProfile {
  public:
    ShearProfile(FlowDomain domain, std::string name,
                 std::function<ProfileValue(cplx)> eval, double u_plus,
                 double wall_slope, double decay_rate, double far_field)
        : domain_(domain), name_(std::move(name)), eval_(std::move(eval)),
          u_plus_(u_plus), wall_slope_(wall_slope), decay_rate_(decay_rate),
          far_field_(far_field) {}

    ProfileValue operator()(cplx y) const { return eval_(y); }
    FlowDomain domain() const { return domain_; }
    const std::string& name() const { return name_; }
    double u_plus() const { return u_plus_; }
    double wall_slope() const { return wall_slope_; }
    double decay_rate() const { return decay_rate_; }
    /// Half-space: y beyond which |U - U+| < 1e-12.  Strip: 1.
    double far_field() const { return far_field_; }
    /// Wall adjacent to the critical layer: y = 0 (half-space) or y = 1 (strip).
    double wall() const { return domain_ == FlowDomain::half_space ? 0.0 : 1.0; }

  private:
    FlowDomain domain_;
    std::string name_;
    std::function<ProfileValue(cplx)> eval_;
    double u_plus_;
    double wall_slope_;
    double decay_rate_;
    double far_field_;
};

/// U_s(y) = u_plus (1 - e^{-y}) on the half space.
ShearProfile make_exponential_half_space(double u_plus);

/// U_s(y) = 1 - y^2 on the strip [-1, 1].
ShearProfile make_parabolic_strip();

struct CriticalLayerData {
    cplx y_c;          // root of U_s(y_c) = c near the wall
    cplx gamma_tilde;  // (alpha * s * U_s'(y_c) / nu)^{1/3}, s = +1 half-space / -1 strip
    cplx lambda_big;   // wall_slope * (y_c - wall) / c, equals 1 + O(c)
};

/// Newton solve of U_s(y_c) = c started from the wall linearization.
/// Throws std::runtime_error after 50 iterations without convergence.
CriticalLayerData critical_layer(const ShearProfile& profile, cplx c,
                                 double alpha, double nu);

}  // namespace tsdisp
