// steady.hpp: stationary states without time integration

#pragma once

#include <span>
#include <vector>

#include "twomode/bogoliubov.hpp"
#include "twomode/dynamics.hpp"
#include "twomode/generators.hpp"

namespace twomode {

struct SteadyResult {
    CharExponent exponent; // t is +infinity
    CovarianceState covariance;
    DampingModel model{DampingModel::Local};
    double spectral_abscissa{0.0};
    double residual{0.0}; // max |N L + L N^T - M|
};

/// Solves N L + L N^T = M as a dense 16x16 system.
/// Throws NotHurwitz when max Re eig(N) >= -1e-12.
SteadyResult steady_exponent(const GeneratorMatrices& gen);

/// max Re eig(drift).
double spectral_abscissa(const Mat4c& drift);

/// Covariance of the normal-mode vacuum |0>_l |0>_m in bare-mode quadratures.
CovarianceState ground_state_covariance(const BogoliubovDecomposition& decomp);

/// Canonical state exp(-H_sys / T) (k_B = 1, T > 0): each normal mode thermal
/// at its own Bose occupation.
CovarianceState canonical_covariance(const BogoliubovDecomposition& decomp, double temperature);

/// Temperature at which a bare oscillator of frequency omega has occupation nbar.
double temperature_for_occupation(double omega, double nbar);

struct SweepRow {
    double nbar{0.0};
    double logneg_local{0.0};
    double logneg_nonlocal{0.0};
    double fidelity_onemode{0.0};  // mode a, local vs nonlocal
    double logneg_canonical{0.0};  // reference, canonical state at the bath temperature
};

/// One row per grid value, with nbar_a = nbar_b = nbar applied to `base`.
std::vector<SweepRow> nbar_sweep(const ModelParams& base, std::span<const double> nbar_grid);

} // namespace twomode
