// model.hpp: physical parameters and initial-state description

#pragma once

#include "twomode/types.hpp"

namespace twomode {

/// Two equal-frequency oscillators a, b with
///   H = omega (a'a + b'b) + kappa (a'b + b'a) + lambda (ab + a'b'),
/// each damped at rate gamma_s into a bath of mean occupancy nbar_s.
/// All rates share the units of omega.
struct ModelParams {
    double omega{1.0};
    double kappa{0.0};
    double lambda{0.0};
    double gamma_a{0.0};
    double gamma_b{0.0};
    double nbar_a{0.0};
    double nbar_b{0.0};

    bool operator==(const ModelParams&) const = default;
};

/// Gaussian single-mode preparation: D(displacement) S(r e^{i theta}) rho_thermal(nbar) S' D'.
struct ModeInit {
    double nbar{0.0};
    double squeeze_r{0.0};
    double squeeze_theta{0.0};
    Complex displacement{0.0, 0.0};

    bool operator==(const ModeInit&) const = default;
};

/// Product state of the two modes.
struct InitialState {
    ModeInit a;
    ModeInit b;

    static InitialState vacuum() { return {}; }

    bool operator==(const InitialState&) const = default;
};

/// Returns `params` unchanged when every invariant holds.
/// Throws NegativeParameter or StabilityViolation otherwise. The stability
/// inequalities are strict: lambda < |omega - kappa|, lambda < omega + kappa,
/// and both bare normal-mode frequencies omega +- kappa must be positive.
ModelParams validate(const ModelParams& params);

/// Throws NegativeParameter for a negative occupation or squeezing magnitude.
InitialState validate(const InitialState& init);

} // namespace twomode
