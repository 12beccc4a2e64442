#include "twomode/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "twomode/errors.hpp"

namespace twomode {

namespace {

constexpr double kNegativeSlack = 1e-12;

} // namespace

double partial_transpose_nu_minus(const CovarianceState& cov) {
    const Mat2 a = cov.V.topLeftCorner<2, 2>();
    const Mat2 b = cov.V.bottomRightCorner<2, 2>();
    const Mat2 c = cov.V.topRightCorner<2, 2>();
    const double det_v = cov.V.determinant();
    const double sigma = a.determinant() + b.determinant() - 2.0 * c.determinant();

    double disc = sigma * sigma - 4.0 * det_v;
    if (disc < -kNegativeSlack) {
        throw UnphysicalCovariance("sigma^2 - 4 det V = " + std::to_string(disc));
    }
    disc = std::max(disc, 0.0);
    const double nu2 = sigma / 2.0 - std::sqrt(disc) / 2.0;
    if (!(nu2 > 0.0)) throw UnphysicalCovariance("nu_-^2 = " + std::to_string(nu2));
    return std::sqrt(nu2);
}

double log_negativity(const CovarianceState& cov) {
    return std::max(0.0, -std::log(2.0 * partial_transpose_nu_minus(cov)));
}

OneModeState one_mode_reduce(const CovarianceState& cov, Mode mode) {
    const int k = mode == Mode::A ? 0 : 2;
    OneModeState s;
    s.A = cov.V.block<2, 2>(k, k);
    s.mean = cov.mean.segment<2>(k);
    return s;
}

OneModeState one_mode_reduce(const CharExponent& state, Mode mode) {
    return one_mode_reduce(to_covariance(state), mode);
}

double fidelity(const OneModeState& s1, const OneModeState& s2) {
    if (s1.mean.cwiseAbs().maxCoeff() > 1e-12 || s2.mean.cwiseAbs().maxCoeff() > 1e-12) {
        throw NonzeroMean("fidelity is defined here for zero-mean states only");
    }
    const Mat2 a1 = 2.0 * s1.A;
    const Mat2 a2 = 2.0 * s2.A;
    const double d1 = a1.determinant();
    const double d2 = a2.determinant();
    if (d1 < 1.0 - 1e-9 || d2 < 1.0 - 1e-9) {
        throw UnphysicalCovariance("one-mode block violates det A >= 1/4");
    }
    const double p = std::max(0.0, (d1 - 1.0) * (d2 - 1.0));
    const double d = (a1 + a2).determinant();
    if (!(d > 0.0)) throw UnphysicalCovariance("det[A1 + A2] must be positive");

    // 2 / (sqrt(d + p) - sqrt(p)) without the cancellation.
    const double f = 2.0 * (std::sqrt(d + p) + std::sqrt(p)) / d;
    if (!std::isfinite(f) || f > 1.0 + 1e-9) {
        throw UnphysicalCovariance("fidelity evaluation out of range");
    }
    return std::min(f, 1.0);
}

} // namespace twomode
