#include "twomode/steady.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "twomode/errors.hpp"
#include "twomode/measures.hpp"

namespace twomode {

double spectral_abscissa(const Mat4c& drift) {
    Eigen::ComplexEigenSolver<Mat4c> solver(drift, false);
    return solver.eigenvalues().real().maxCoeff();
}

SteadyResult steady_exponent(const GeneratorMatrices& gen) {
    const Mat4c& n = gen.drift;
    SteadyResult result;
    result.model = gen.model;
    result.spectral_abscissa = spectral_abscissa(n);
    if (result.spectral_abscissa >= -1e-12) {
        throw NotHurwitz("drift spectral abscissa " + std::to_string(result.spectral_abscissa)
                         + " leaves no unique steady state");
    }

    // vec(N L + L N^T) = (I kron N + N kron I) vec(L), column-major vec.
    Eigen::Matrix<Complex, 16, 16> op = Eigen::Matrix<Complex, 16, 16>::Zero();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                op(i + 4 * j, k + 4 * j) += n(i, k);
                op(i + 4 * j, i + 4 * k) += n(j, k);
            }
        }
    }
    const Eigen::Matrix<Complex, 16, 1> rhs = gen.diffusion.reshaped();
    const Eigen::Matrix<Complex, 16, 1> sol = op.fullPivLu().solve(rhs);

    CharExponent& e = result.exponent;
    e.ell = sol.reshaped(4, 4);
    e.ell = 0.5 * (e.ell + e.ell.transpose()).eval();
    e.h.setZero();
    e.t = std::numeric_limits<double>::infinity();

    result.residual = (n * e.ell + e.ell * n.transpose() - gen.diffusion).cwiseAbs().maxCoeff();
    result.covariance = to_covariance(e);
    return result;
}

namespace {

// Both normal modes thermal (occupations n_l, n_m), expressed in a, b.
CovarianceState normal_mode_thermal(const BogoliubovDecomposition& d, double n_l, double n_m) {
    // e = alpha1 l - beta1 l', f = alpha2 m - beta2 m'.
    const double ee = d.alpha1 * d.alpha1 * n_l + d.beta1 * d.beta1 * (n_l + 1.0);   // <e'e>
    const double ff = d.alpha2 * d.alpha2 * n_m + d.beta2 * d.beta2 * (n_m + 1.0);   // <f'f>
    const double e2 = -d.alpha1 * d.beta1 * (2.0 * n_l + 1.0);                         // <e e>
    const double f2 = -d.alpha2 * d.beta2 * (2.0 * n_m + 1.0);                         // <f f>

    // a = (e + f)/sqrt2, b = (e - f)/sqrt2; e and f are uncorrelated.
    const double n_a = (ee + ff) / 2.0;       // <a'a> = <b'b>
    const double aa = (e2 + f2) / 2.0;        // <a a> = <b b>
    const double ab = (e2 - f2) / 2.0;        // <a b>
    const double a_bdag = (ee - ff) / 2.0;    // <a b'> = <a'b>

    Mat4c nm;
    nm << aa, n_a, ab, a_bdag,
          n_a, aa, a_bdag, ab,
          ab, a_bdag, aa, n_a,
          a_bdag, ab, n_a, aa;
    return to_covariance(from_normal_moments(nm));
}

double bose_occupation(double frequency, double temperature) {
    if (temperature <= 0.0) return 0.0;
    return 1.0 / std::expm1(frequency / temperature);
}

} // namespace

CovarianceState ground_state_covariance(const BogoliubovDecomposition& decomp) {
    return normal_mode_thermal(decomp, 0.0, 0.0);
}

CovarianceState canonical_covariance(const BogoliubovDecomposition& decomp, double temperature) {
    if (temperature < 0.0) throw NegativeParameter("temperature must be >= 0");
    return normal_mode_thermal(decomp, bose_occupation(decomp.omega_l, temperature),
                               bose_occupation(decomp.omega_m, temperature));
}

double temperature_for_occupation(double omega, double nbar) {
    if (nbar < 0.0) throw NegativeParameter("nbar must be >= 0");
    if (nbar == 0.0) return 0.0;
    return omega / std::log1p(1.0 / nbar);
}

std::vector<SweepRow> nbar_sweep(const ModelParams& base, std::span<const double> nbar_grid) {
    std::vector<SweepRow> rows;
    rows.reserve(nbar_grid.size());
    for (const double nbar : nbar_grid) {
        if (!(nbar >= 0.0)) throw NegativeParameter("sweep occupancies must be >= 0");
        ModelParams p = base;
        p.nbar_a = p.nbar_b = nbar;

        const SteadyResult local = steady_exponent(build_local(p));
        const SteadyResult nonlocal = steady_exponent(build_nonlocal_thermal(p));

        SweepRow row;
        row.nbar = nbar;
        row.logneg_local = log_negativity(local.covariance);
        row.logneg_nonlocal = log_negativity(nonlocal.covariance);
        row.fidelity_onemode = fidelity(one_mode_reduce(local.covariance, Mode::A),
                                        one_mode_reduce(nonlocal.covariance, Mode::A));
        row.logneg_canonical = log_negativity(
            canonical_covariance(diagonalize(p), temperature_for_occupation(p.omega, nbar)));
        rows.push_back(row);
    }
    return rows;
}

} // namespace twomode
