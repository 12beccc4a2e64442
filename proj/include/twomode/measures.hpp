// measures.hpp: entanglement and one-mode fidelity of Gaussian states

#pragma once

#include "twomode/dynamics.hpp"
#include "twomode/types.hpp"

namespace twomode {

enum class Mode { A, B };

/// One-mode Gaussian state; A is the 2x2 quadrature covariance with vacuum A = I/2.
struct OneModeState {
    Mat2 A{Mat2::Identity() / 2.0};
    Vec2 mean{Vec2::Zero()};
};

/// Smallest symplectic eigenvalue of the partially transposed covariance,
/// nu_- = sqrt(sigma/2 - sqrt(sigma^2 - 4 det V)/2) with
/// sigma = det A1 + det B1 - 2 det C1. Throws UnphysicalCovariance.
double partial_transpose_nu_minus(const CovarianceState& cov);

/// max(0, -ln(2 nu_-)).
double log_negativity(const CovarianceState& cov);

OneModeState one_mode_reduce(const CovarianceState& cov, Mode mode);
OneModeState one_mode_reduce(const CharExponent& state, Mode mode);

/// Uhlmann fidelity (squared-trace convention) of two zero-mean one-mode
/// Gaussian states:
///   F = 2 / (sqrt(det[A1 + A2] + P) - sqrt(P)),  P = (det A1 - 1)(det A2 - 1)
/// with blocks scaled to vacuum = I. Throws NonzeroMean or UnphysicalCovariance.
double fidelity(const OneModeState& s1, const OneModeState& s2);

} // namespace twomode
