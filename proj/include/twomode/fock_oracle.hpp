// fock_oracle.hpp: brute-force master equations in a truncated two-mode Fock space

#pragma once

#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "twomode/dynamics.hpp"
#include "twomode/model.hpp"

namespace twomode::fock {

using SpMat = Eigen::SparseMatrix<Complex>;
using DenseMat = Eigen::MatrixXcd;

/// rate * (A rho B' - 1/2 {B'A, rho}). A == B is an ordinary Lindblad term.
struct DissipatorTerm {
    double rate{0.0};
    SpMat jump;
    SpMat partner;
};

/// Basis index n_a * cutoff + n_b, with n < cutoff per mode.
struct TruncatedSystem {
    int cutoff{0};
    SpMat a, a_dag, b, b_dag;
    SpMat hamiltonian;
    std::vector<DissipatorTerm> dissipators;
    double max_step_hint{0.02}; // step cap shared with the Gaussian integrator

    Eigen::Index dim() const { return static_cast<Eigen::Index>(cutoff) * cutoff; }
};

struct DensityMatrix {
    DenseMat rho;
};

/// Mode operators and H_sys only; no dissipators. Throws CutoffTooSmall.
TruncatedSystem build_closed(const ModelParams& params, int cutoff);

/// Lindblad terms 2 Gamma_s (nbar_s + 1) L[s] + 2 Gamma_s nbar_s L[s'] for s = a, b,
/// which is the generator whose characteristic-function ODE is build_local.
TruncatedSystem build_local_superop(const ModelParams& params, int cutoff);

/// Eigenmode form: 2<FF'> L[l] + 2<QQ'> L[m], plus 2<F'F> L[l'] + 2<Q'Q> L[m']
/// when nbar > 0, with bath rate gamma_a / 2.
TruncatedSystem build_nonlocal_superop(const ModelParams& params, int cutoff);

/// Same generator written with the bare-mode coefficients Gamma_1..Gamma_6.
TruncatedSystem build_nonlocal_bare_superop(const ModelParams& params, int cutoff);

/// Action of the Liouvillian on rho.
DenseMat apply_liouvillian(const TruncatedSystem& system, const DenseMat& rho);

/// Column-stacked superoperator (dim^2 x dim^2). Intended for small cutoffs.
SpMat superoperator(const TruncatedSystem& system);

struct IntegrateOptions {
    /// Check trace / Hermiticity / positivity at every sample.
    bool check_invariants{true};
};

/// Samples at 0, dt_out, ..., t_end with the RK4 step policy of `evolve`.
std::vector<DensityMatrix> integrate(const TruncatedSystem& system, const DensityMatrix& rho0,
                                     double t_end, double dt_out,
                                     const IntegrateOptions& options = {});

/// Product Gaussian state, built in an enlarged space and truncated.
DensityMatrix product_state(const InitialState& init, int cutoff);

/// Lowest eigenvector of the Hamiltonian as a pure state.
DensityMatrix ground_state(const TruncatedSystem& system);

Complex expectation(const DensityMatrix& state, const SpMat& op);

/// Moments by direct operator averages.
Moments moments(const TruncatedSystem& system, const DensityMatrix& state);

/// V_ij = <{R_i, R_j}>/2 - <R_i><R_j> from truncated quadrature operators.
CovarianceState covariance(const TruncatedSystem& system, const DensityMatrix& state);

struct DensityDiagnostics {
    double trace_error{0.0};
    double hermiticity_error{0.0};
    double min_eigenvalue{0.0};
};

DensityDiagnostics diagnose(const DensityMatrix& state);

/// Throws PhysicalityLoss when a DensityMatrix tolerance is exceeded
/// (trace 1e-9, Hermiticity 1e-10, eigenvalues >= -1e-8).
void check_invariants(const DensityMatrix& state);

} // namespace twomode::fock
