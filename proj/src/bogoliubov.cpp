#include "twomode/bogoliubov.hpp"

#include <cmath>

#include "twomode/errors.hpp"

namespace twomode {

namespace {

struct ModeCoefficients {
    double alpha;
    double beta_magnitude;
};

// alpha^2 = 1/2 + w/(2 sqrt(w^2 - lambda^2)), beta^2 = alpha^2 - 1.
ModeCoefficients squeeze_coefficients(double w, double lambda) {
    const double root = std::sqrt(w * w - lambda * lambda);
    const double ratio = w / root;
    return {std::sqrt(0.5 + 0.5 * ratio), std::sqrt(std::max(0.0, -0.5 + 0.5 * ratio))};
}

} // namespace

BogoliubovDecomposition diagonalize(const ModelParams& params) {
    const ModelParams& p = params;
    const auto e = squeeze_coefficients(p.omega + p.kappa, p.lambda);
    const auto f = squeeze_coefficients(p.omega - p.kappa, p.lambda);

    BogoliubovDecomposition d;
    d.alpha1 = e.alpha;
    d.beta1 = e.beta_magnitude;
    d.alpha2 = f.alpha;
    d.beta2 = -f.beta_magnitude;

    const double a11 = ((2 * p.omega + p.kappa) * d.alpha1 * d.alpha1 - 2 * p.lambda * d.alpha1 * d.beta1
                        + p.kappa * d.beta1 * d.beta1) / 2;
    const double a22 = ((2 * p.omega + p.kappa) * d.beta1 * d.beta1 - 2 * p.lambda * d.alpha1 * d.beta1
                        + p.kappa * d.alpha1 * d.alpha1) / 2;
    const double b11 = ((2 * p.omega - p.kappa) * d.alpha2 * d.alpha2 + 2 * p.lambda * d.alpha2 * d.beta2
                        - p.kappa * d.beta2 * d.beta2) / 2;
    const double b22 = ((2 * p.omega - p.kappa) * d.beta2 * d.beta2 + 2 * p.lambda * d.alpha2 * d.beta2
                        - p.kappa * d.alpha2 * d.alpha2) / 2;
    d.omega_l = a11 + a22;
    d.omega_m = b11 + b22;
    return d;
}

std::array<double, 2> squeezing_residual(const ModelParams& p, const BogoliubovDecomposition& d) {
    // e-mode: (w+k) e'e + lambda/2 (e^2 + e'^2); f-mode: (w-k) f'f - lambda/2 (f^2 + f'^2).
    const double l2 = -(p.omega + p.kappa) * d.alpha1 * d.beta1
                      + 0.5 * p.lambda * (d.alpha1 * d.alpha1 + d.beta1 * d.beta1);
    const double m2 = -(p.omega - p.kappa) * d.alpha2 * d.beta2
                      - 0.5 * p.lambda * (d.alpha2 * d.alpha2 + d.beta2 * d.beta2);
    return {l2, m2};
}

Mat4 normal_mode_map(const BogoliubovDecomposition& d) {
    // l = alpha1 e + beta1 e',  m = alpha2 f + beta2 f'.
    const double s = 1.0 / std::sqrt(2.0);
    Mat4 k;
    k << d.alpha1 * s, d.alpha1 * s, d.beta1 * s, d.beta1 * s,
         d.alpha2 * s, -d.alpha2 * s, d.beta2 * s, -d.beta2 * s,
         d.beta1 * s, d.beta1 * s, d.alpha1 * s, d.alpha1 * s,
         d.beta2 * s, -d.beta2 * s, d.alpha2 * s, -d.alpha2 * s;
    return k;
}

RateSet rates(const BogoliubovDecomposition& d, double bath_rate, double nbar) {
    if (!(bath_rate >= 0.0)) throw NegativeParameter("bath rate must be >= 0");
    if (!(nbar >= 0.0)) throw NegativeParameter("nbar must be >= 0");

    const double f2 = (d.alpha1 - d.beta1) * (d.alpha1 - d.beta1);
    const double q2 = (d.alpha2 - d.beta2) * (d.alpha2 - d.beta2);

    RateSet r;
    r.ff_corr = 2 * bath_rate * (1 + nbar) * f2;
    r.qq_corr = 2 * bath_rate * (1 + nbar) * q2;
    r.ff_corr_th = 2 * bath_rate * nbar * f2;
    r.qq_corr_th = 2 * bath_rate * nbar * q2;

    const double a1 = d.alpha1 * d.alpha1, b1 = d.beta1 * d.beta1, ab1 = d.alpha1 * d.beta1;
    const double a2 = d.alpha2 * d.alpha2, b2 = d.beta2 * d.beta2, ab2 = d.alpha2 * d.beta2;
    const double ff = r.ff_corr, qq = r.qq_corr, ft = r.ff_corr_th, qt = r.qq_corr_th;

    // l' and m' exchange the roles of alpha and beta in the a/a' coefficients.
    r.gamma[0] = (ff * a1 + qq * a2 + ft * b1 + qt * b2) / 2;
    r.gamma[1] = (ff * b1 + qq * b2 + ft * a1 + qt * a2) / 2;
    r.gamma[2] = (ff * ab1 + qq * ab2 + ft * ab1 + qt * ab2) / 2;
    r.gamma[3] = (ff * a1 - qq * a2 + ft * b1 - qt * b2) / 2;
    r.gamma[4] = (ff * b1 - qq * b2 + ft * a1 - qt * a2) / 2;
    r.gamma[5] = (ff * ab1 - qq * ab2 + ft * ab1 - qt * ab2) / 2;
    return r;
}

} // namespace twomode
