#include "twomode/model.hpp"

#include <cmath>
#include <string>

#include "twomode/errors.hpp"

namespace twomode {

namespace {

void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) throw NegativeParameter(std::string(name) + " must be finite");
}

void require_nonnegative(double value, const char* name) {
    require_finite(value, name);
    if (value < 0.0) throw NegativeParameter(std::string(name) + " must be >= 0");
}

} // namespace

ModelParams validate(const ModelParams& p) {
    require_finite(p.omega, "omega");
    require_finite(p.kappa, "kappa");
    if (!(p.omega > 0.0)) throw NegativeParameter("omega must be > 0");
    require_nonnegative(p.lambda, "lambda");
    require_nonnegative(p.gamma_a, "gamma_a");
    require_nonnegative(p.gamma_b, "gamma_b");
    require_nonnegative(p.nbar_a, "nbar_a");
    require_nonnegative(p.nbar_b, "nbar_b");

    const double lower = p.omega - p.kappa;
    const double upper = p.omega + p.kappa;
    if (!(p.lambda < std::abs(lower)) || !(p.lambda < upper)) {
        throw StabilityViolation("lambda must satisfy lambda < |omega - kappa| and lambda < omega + kappa");
    }
    // For kappa >= omega the relative mode has non-positive frequency and H_sys
    // is unbounded below; the normal-mode coefficients are then imaginary.
    if (!(lower > 0.0)) throw StabilityViolation("kappa must be < omega");
    return p;
}

InitialState validate(const InitialState& init) {
    for (const ModeInit* m : {&init.a, &init.b}) {
        require_nonnegative(m->nbar, "initial nbar");
        require_nonnegative(m->squeeze_r, "squeeze_r");
        require_finite(m->squeeze_theta, "squeeze_theta");
        require_finite(m->displacement.real(), "displacement");
        require_finite(m->displacement.imag(), "displacement");
    }
    return init;
}

} // namespace twomode
