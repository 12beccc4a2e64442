#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "twomode/bogoliubov.hpp"
#include "twomode/errors.hpp"

using namespace twomode;
using doctest::Approx;

TEST_SUITE("bogoliubov") {

TEST_CASE("lambda = 0 gives the identity transformation") {
    for (double k : {0.0, 0.05, 0.25, -0.4}) {
        const auto d = diagonalize(ModelParams{1.0, k, 0.0});
        CHECK(d.alpha1 == 1.0);
        CHECK(d.alpha2 == 1.0);
        CHECK(d.beta1 == 0.0);
        CHECK(d.beta2 == 0.0);
        CHECK(d.omega_l == Approx(1.0 + k).epsilon(1e-14));
        CHECK(d.omega_m == Approx(1.0 - k).epsilon(1e-14));
    }
}

TEST_CASE("symmetric squeezing regime") {
    const auto d = diagonalize(ModelParams{1.0, 0.0, 1.0 / 3.0});
    CHECK(d.alpha1 * d.alpha1 == Approx(1.030330).epsilon(1e-6));
    CHECK(d.beta1 * d.beta1 == Approx(0.030330).epsilon(1e-5));
    CHECK(d.omega_l == Approx(0.942809).epsilon(1e-6));
    CHECK(d.omega_m == Approx(0.942809).epsilon(1e-6));
    CHECK(d.beta1 >= 0.0);
    CHECK(d.beta2 <= 0.0);
}

TEST_CASE("beam splitter plus squeezing frequencies") {
    const auto d = diagonalize(ModelParams{1.0, 0.05, 0.05});
    CHECK(d.omega_l == Approx(1.048809).epsilon(1e-6));
    CHECK(d.omega_m == Approx(0.948683).epsilon(1e-6));
}

TEST_CASE("symplectic normalization, closed-form frequencies and diagonal form on random parameters") {
    std::mt19937 rng(17);
    for (int n = 0; n < 100; ++n) {
        const auto p = oracle::random_params(rng, false);
        const auto d = diagonalize(p);
        CHECK(std::abs(d.alpha1 * d.alpha1 - d.beta1 * d.beta1 - 1.0) < 1e-12);
        CHECK(std::abs(d.alpha2 * d.alpha2 - d.beta2 * d.beta2 - 1.0) < 1e-12);
        CHECK(d.alpha1 >= 1.0);
        CHECK(d.alpha2 >= 1.0);
        CHECK(d.beta1 >= 0.0);
        const double wp = p.omega + p.kappa, wm = p.omega - p.kappa;
        CHECK(std::abs(d.omega_l - std::sqrt(wp * wp - p.lambda * p.lambda)) < 1e-10);
        CHECK(std::abs(d.omega_m - std::sqrt(wm * wm - p.lambda * p.lambda)) < 1e-10);

        // Rewrite H in the normal-mode basis: only l'l and m'm survive.
        const Mat4 g = oracle::normal_mode_hamiltonian(p, d);
        CHECK(g.block<2, 2>(0, 2).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(g.block<2, 2>(2, 0).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(std::abs(g(0, 1)) < 1e-10);
        CHECK(std::abs(g(0, 0) - d.omega_l) < 1e-10);
        CHECK(std::abs(g(1, 1) - d.omega_m) < 1e-10);

        const auto res = squeezing_residual(p, d);
        CHECK(std::abs(res[0]) < 1e-10);
        CHECK(std::abs(res[1]) < 1e-10);
    }
}

TEST_CASE("the opposite beta2 sign leaves the m-mode squeezed") {
    const ModelParams p{1.0, 0.1, 0.4};
    auto d = diagonalize(p);
    d.beta2 = -d.beta2;
    const Mat4 g = oracle::normal_mode_hamiltonian(p, d);
    CHECK(std::abs(g(1, 3)) > 1e-3);
}

TEST_CASE("beta shrinks monotonically as lambda goes to 0") {
    double prev1 = 1e9, prev2 = 1e9;
    for (double l : {0.5, 0.2, 0.1, 0.01, 1e-4}) {
        const auto d = diagonalize(ModelParams{1.0, 0.1, l});
        CHECK(d.beta1 < prev1);
        CHECK(std::abs(d.beta2) < prev2);
        prev1 = d.beta1;
        prev2 = std::abs(d.beta2);
    }
    CHECK(prev1 < 1e-4);
}

TEST_CASE("noise correlations against the surd forms") {
    std::mt19937 rng(5);
    for (int n = 0; n < 50; ++n) {
        const auto p = oracle::random_params(rng, false);
        const auto r = rates(diagonalize(p), 0.5, 0.0);
        CHECK(r.ff_corr == Approx(oracle::surd_f(p)).epsilon(1e-12));
        CHECK(r.qq_corr == Approx(oracle::surd_q(p)).epsilon(1e-12));
    }
}

TEST_CASE("rates in the rotating-wave limit") {
    const double g = 0.005;
    const auto r = rates(diagonalize(ModelParams{1.0, 0.2, 0.0}), g, 0.0);
    CHECK(r.ff_corr == Approx(2 * g));
    CHECK(r.qq_corr == Approx(2 * g));
    CHECK(r.gamma_n(1) == Approx(2 * g));
    for (int i = 2; i <= 6; ++i) CHECK(std::abs(r.gamma_n(i)) < 1e-18);
}

TEST_CASE("rates in the symmetric squeezing regime") {
    const auto d = diagonalize(ModelParams{1.0, 0.0, 1.0 / 3.0});
    const auto r = rates(d, 0.005, 0.0);
    // beta2 <= 0 makes (alpha2 - beta2)^2 the reciprocal of (alpha1 - beta1)^2 here.
    CHECK(r.ff_corr == Approx(0.0070711).epsilon(1e-5));
    CHECK(r.qq_corr == Approx(0.0141421).epsilon(1e-5));
    CHECK(r.ff_corr == Approx(2 * 0.005 * std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("rate identities at zero occupancy") {
    std::mt19937 rng(11);
    for (int n = 0; n < 100; ++n) {
        const auto p = oracle::random_params(rng, true);
        const auto d = diagonalize(p);
        const auto r = rates(d, p.gamma_a / 2, 0.0);
        CHECK(r.gamma_n(1) >= 0.0);
        CHECK(r.gamma_n(2) >= 0.0);
        CHECK(std::abs(r.gamma_n(1) - r.gamma_n(2) - (r.ff_corr + r.qq_corr) / 2) < 1e-12);
        const double lhs = r.gamma_n(1) * r.gamma_n(1) - r.gamma_n(4) * r.gamma_n(4);
        const double rhs = r.ff_corr * r.qq_corr * d.alpha1 * d.alpha1 * d.alpha2 * d.alpha2;
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("thermal rates scale the correlations") {
    const auto d = diagonalize(ModelParams{1.0, 0.1, 0.2});
    const auto r0 = rates(d, 0.005, 0.0);
    const auto r = rates(d, 0.005, 0.3);
    CHECK(r.ff_corr == Approx(1.3 * r0.ff_corr));
    CHECK(r.qq_corr == Approx(1.3 * r0.qq_corr));
    CHECK(r.ff_corr_th == Approx(0.3 * r0.ff_corr));
    CHECK(r.qq_corr_th == Approx(0.3 * r0.qq_corr));
    // Damping is set by the commutator: normal minus anti-normal order.
    CHECK(r.gamma_n(1) - r.gamma_n(2) == Approx(r0.gamma_n(1) - r0.gamma_n(2)).epsilon(1e-12));
}

TEST_CASE("zero bath rate gives zero rates, negative inputs are rejected") {
    const auto d = diagonalize(ModelParams{1.0, 0.1, 0.2});
    const auto r = rates(d, 0.0, 0.0);
    CHECK(r.ff_corr == 0.0);
    CHECK(r.qq_corr == 0.0);
    for (double g : r.gamma) CHECK(g == 0.0);
    CHECK_THROWS_AS(rates(d, -1.0, 0.0), NegativeParameter);
    CHECK_THROWS_AS(rates(d, 1.0, -0.1), NegativeParameter);
}

}
