// dynamics.hpp: Gaussian characteristic-function exponent and its evolution

#pragma once

#include <vector>

#include "twomode/generators.hpp"
#include "twomode/model.hpp"
#include "twomode/types.hpp"

namespace twomode {

/// Normal-ordered characteristic function
///   chi(z) = <e^{k_a a'} e^{-k_a* a} e^{k_b b'} e^{-k_b* b}> = exp(-z^T ell z + i z^T h)
/// with z = (k_a, k_a*, k_b, k_b*). This ordering is used everywhere.
struct CharExponent {
    Mat4c ell{Mat4c::Zero()};
    Vec4c h{Vec4c::Zero()};
    double t{0.0};
};

/// Quadrature form with R = (q_a, p_a, q_b, p_b), q = (a + a')/sqrt2,
/// p = (a - a')/(i sqrt2); the vacuum has V = I/2.
struct CovarianceState {
    Vec4 mean{Vec4::Zero()};
    Mat4 V{Mat4::Identity() / 2.0};
};

/// Raw (not centred) first and second moments.
struct Moments {
    Complex a{};
    Complex b{};
    double n_a{0.0};   // <a'a>
    double n_b{0.0};   // <b'b>
    Complex aa{};      // <a a>
    Complex bb{};      // <b b>
    Complex ab{};      // <a b>
    Complex a_bdag{};  // <a b'>
    // Conjugates: <a'a'> = conj(aa), <a'b> = conj(a_bdag), etc.
};

CharExponent initial_exponent(const InitialState& init);

struct EvolveOptions {
    /// Step cap as a fraction of the fastest oscillation period / 2pi.
    double step_fraction{1.0 / 50.0};
    /// Repeat the run at half the step and require agreement within
    /// `richardson_tolerance`; refine up to `max_refinements` times.
    bool richardson_check{false};
    double richardson_tolerance{1e-9};
    int max_refinements{4};
    /// Lower bound on the smallest eigenvalue of V + (i/2) Omega.
    double physicality_tolerance{1e-9};
};

/// Samples at state.t, state.t + dt_out, ..., t_end.
/// Throws StepSizeUnderflow or PhysicalityLoss.
std::vector<CharExponent> evolve(const CharExponent& state, const GeneratorMatrices& gen,
                                 double t_end, double dt_out, const EvolveOptions& options = {});

/// Richardson estimate of the largest sample error at the default step.
double richardson_error(const CharExponent& state, const GeneratorMatrices& gen, double t_end,
                        double dt_out, const EvolveOptions& options = {});

/// dL/dt and dh/dt at `state`.
CharExponent time_derivative(const CharExponent& state, const GeneratorMatrices& gen);

Moments moments(const CharExponent& state);

/// Throws PhysicalityLoss when V + (i/2) Omega has an eigenvalue below -1e-9.
CovarianceState to_covariance(const CharExponent& state);

/// Smallest eigenvalue of the Hermitian matrix V + (i/2) Omega.
double physicality_margin(const CovarianceState& cov);

/// Symplectic form for (q_a, p_a, q_b, p_b).
Mat4 symplectic_form();

/// Builds the exponent whose centred moments reproduce `cov`. Inverse of to_covariance.
CharExponent from_covariance(const CovarianceState& cov, double t = 0.0);

/// Exponent with centred normal-ordered moments <:x_i x_j:>, x = (a', a, b', b).
CharExponent from_normal_moments(const Mat4c& central, Complex mean_a = {}, Complex mean_b = {});

} // namespace twomode
