// bogoliubov.hpp: normal modes of the coupled pair and the derived bath rates

#pragma once

#include <array>

#include "twomode/model.hpp"
#include "twomode/types.hpp"

namespace twomode {

/// Normal modes l, m of H_sys. With e = (a+b)/sqrt2, f = (a-b)/sqrt2:
///   e = alpha1 l - beta1 l',   f = alpha2 m - beta2 m'
/// and H_sys = omega_l l'l + omega_m m'm up to a constant.
///
/// alpha1, alpha2 >= 1 and beta1 >= 0. beta2 <= 0: the f-mode squeezing term
/// enters H_sys with the opposite sign of the e-mode one, so its Bogoliubov
/// angle is reversed.
struct BogoliubovDecomposition {
    double alpha1{1.0};
    double beta1{0.0};
    double alpha2{1.0};
    double beta2{0.0};
    double omega_l{1.0};
    double omega_m{1.0};
};

BogoliubovDecomposition diagonalize(const ModelParams& params);

/// Coefficient of l^2 (first) and m^2 (second) left in H_sys after
/// substituting the decomposition; both vanish for an exact diagonalization.
std::array<double, 2> squeezing_residual(const ModelParams& params,
                                         const BogoliubovDecomposition& decomp);

/// Real 4x4 map K with (l, m, l', m')^T = K (a, b, a', b')^T.
Mat4 normal_mode_map(const BogoliubovDecomposition& decomp);

/// Noise correlations of the eigenmode master equation and the coefficients
/// Gamma_1..Gamma_6 of its bare-mode form
///   sum_i Gamma_i [2 A rho B' - B'A rho - rho B'A]
/// over the operator pairs (A, B) of each rate. ff_corr_th and qq_corr_th are
/// the anti-normally ordered (thermal) correlations; they drive l' and m'
/// and are folded into gamma[] so that gamma[] always describes the full
/// bare-mode generator.
struct RateSet {
    double ff_corr{0.0};
    double qq_corr{0.0};
    double ff_corr_th{0.0};
    double qq_corr_th{0.0};
    std::array<double, 6> gamma{}; // gamma[0] is Gamma_1

    double gamma_n(int i) const { return gamma.at(static_cast<std::size_t>(i - 1)); }
};

/// bath_rate is the flat-spectrum rate pi zeta^2; nbar its mean occupancy.
RateSet rates(const BogoliubovDecomposition& decomp, double bath_rate, double nbar);

} // namespace twomode
