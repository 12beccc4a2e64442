#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "twomode/errors.hpp"
#include "twomode/measures.hpp"

using namespace twomode;
using doctest::Approx;

namespace {

CovarianceState cov_of(const Mat4& v) {
    CovarianceState c;
    c.V = v;
    return c;
}

Mat2 rotation(double t) {
    Mat2 r;
    r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return r;
}

Mat2 single_mode(double n, double r, double phi) {
    const Mat2 rot = rotation(phi);
    const Vec2 d{std::exp(-2 * r), std::exp(2 * r)};
    return (n + 0.5) * rot * d.asDiagonal() * rot.transpose();
}

// Random local symplectic map: rotation, squeeze, rotation on each mode.
Mat4 random_local_symplectic(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat4 s = Mat4::Zero();
    for (int k : {0, 2}) {
        const double r = 0.5 * u(rng);
        const Vec2 d{std::exp(-r), std::exp(r)};
        s.block<2, 2>(k, k) = rotation(3 * u(rng)) * d.asDiagonal() * rotation(3 * u(rng));
    }
    return s;
}

} // namespace

TEST_SUITE("measures") {

TEST_CASE("two-mode vacuum is not entangled") {
    CHECK(log_negativity(cov_of(Mat4::Identity() / 2)) == 0.0);
}

TEST_CASE("two-mode squeezed vacuum") {
    for (double r : {0.1, 0.5, 1.0}) {
        const auto c = cov_of(oracle::two_mode_squeezed(r));
        CHECK(partial_transpose_nu_minus(c) == Approx(oracle::partial_transpose_nu_minus(c.V)).epsilon(1e-12));
        CHECK(log_negativity(c) == Approx(2 * r).epsilon(1e-12));
    }
}

TEST_CASE("product states are never entangled") {
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 50; ++n) {
        Mat4 v = Mat4::Zero();
        v.topLeftCorner<2, 2>() = single_mode(u(rng), u(rng), 6 * u(rng));
        v.bottomRightCorner<2, 2>() = single_mode(u(rng), u(rng), 6 * u(rng));
        CHECK(log_negativity(cov_of(v)) == 0.0);
    }
}

TEST_CASE("log negativity is invariant under local symplectic maps") {
    std::mt19937 rng(9);
    const Mat4 v = oracle::two_mode_squeezed(0.4) + 0.1 * Mat4::Identity();
    const double ref = log_negativity(cov_of(v));
    CHECK(ref > 0.0);
    for (int n = 0; n < 30; ++n) {
        const Mat4 s = random_local_symplectic(rng);
        const Mat4 w = s * v * s.transpose();
        CHECK(std::abs(log_negativity(cov_of(w)) - ref) < 1e-9);
        CHECK(partial_transpose_nu_minus(cov_of(w)) == Approx(oracle::partial_transpose_nu_minus(w)).epsilon(1e-10));
    }
}

TEST_CASE("unphysical covariance is rejected") {
    // A = B = I with maximal anticorrelation C = diag(1, -1) gives nu_- = 0.
    Mat4 v = Mat4::Identity();
    v(0, 2) = v(2, 0) = 1.0;
    v(1, 3) = v(3, 1) = -1.0;
    CHECK_THROWS_AS(log_negativity(cov_of(v)), UnphysicalCovariance);
    CHECK_THROWS_AS(partial_transpose_nu_minus(cov_of(v)), UnphysicalCovariance);
}

TEST_CASE("one mode reductions") {
    CovarianceState vac;
    CHECK((one_mode_reduce(vac, Mode::A).A - Mat2::Identity() / 2).norm() == 0.0);
    CHECK(one_mode_reduce(vac, Mode::B).mean.norm() == 0.0);

    InitialState init;
    init.a.nbar = 0.3;
    const auto a = one_mode_reduce(initial_exponent(init), Mode::A);
    CHECK((a.A - 0.8 * Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-15);

    const auto tms = cov_of(oracle::two_mode_squeezed(0.6));
    for (auto m : {Mode::A, Mode::B}) {
        CHECK((one_mode_reduce(tms, m).A - std::cosh(1.2) / 2 * Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("fidelity of identical states is one and fidelity is symmetric") {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 30; ++n) {
        OneModeState s1, s2;
        s1.A = single_mode(u(rng), u(rng), 6 * u(rng));
        s2.A = single_mode(u(rng), u(rng), 6 * u(rng));
        CHECK(std::abs(fidelity(s1, s1) - 1.0) < 1e-12);
        CHECK(std::abs(fidelity(s1, s2) - fidelity(s2, s1)) < 1e-12);
        CHECK(fidelity(s1, s2) <= 1.0);
    }
}

TEST_CASE("vacuum versus thermal") {
    for (int k = 0; k <= 10; ++k) {
        const double n = 0.1 * k;
        OneModeState vac, th;
        th.A = (n + 0.5) * Mat2::Identity();
        CHECK(std::abs(fidelity(vac, th) - 1.0 / (1.0 + n)) < 1e-10);
    }
    OneModeState vac, th;
    th.A = Mat2::Identity();
    CHECK(fidelity(vac, th) == Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(oracle::fock_fidelity(vac.A, th.A, 30) == Approx(2.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("closed form matches the Fock-space fidelity") {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 6; ++n) {
        OneModeState s1, s2;
        s1.A = single_mode(0.3 * u(rng), 0.3 * u(rng), 6 * u(rng));
        s2.A = single_mode(0.3 * u(rng), 0.3 * u(rng), 6 * u(rng));
        CHECK(fidelity(s1, s2) == Approx(oracle::fock_fidelity(s1.A, s2.A, 30)).epsilon(1e-7));
    }
}

TEST_CASE("fidelity rejects displaced or unphysical inputs") {
    OneModeState vac, shifted;
    shifted.mean = Vec2{0.1, 0.0};
    CHECK_THROWS_AS(fidelity(vac, shifted), NonzeroMean);
    OneModeState bad;
    bad.A = 0.4 * Mat2::Identity();
    CHECK_THROWS_AS(fidelity(vac, bad), UnphysicalCovariance);
}

}
