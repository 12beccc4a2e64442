#include <doctest.h>

#include <cmath>
#include <limits>

#include "twomode/errors.hpp"
#include "twomode/model.hpp"

using namespace twomode;

TEST_SUITE("model") {

TEST_CASE("figure regime parameters are accepted unchanged") {
    const ModelParams p{1.0, 0.05, 0.05, 0.01, 0.01, 0.0, 0.0};
    CHECK(validate(p) == p);
}

TEST_CASE("lambda at the stability boundary is rejected") {
    CHECK_THROWS_AS(validate(ModelParams{1.0, 0.0, 1.0}), StabilityViolation);
    CHECK_THROWS_AS(validate(ModelParams{1.0, 0.2, 0.8}), StabilityViolation);
    CHECK_THROWS_AS(validate(ModelParams{1.0, -0.2, 0.8}), StabilityViolation);
    CHECK_NOTHROW(validate(ModelParams{1.0, 0.2, std::nextafter(0.8, 0.0)}));
}

TEST_CASE("uncoupled squeezing with zero damping is accepted") {
    const ModelParams p{1.0, 0.3, 0.0, 0.0, 0.0, 0.0, 0.0};
    CHECK(validate(p) == p);
}

TEST_CASE("negative or non-finite values are rejected") {
    CHECK_THROWS_AS(validate(ModelParams{-1.0}), NegativeParameter);
    CHECK_THROWS_AS(validate(ModelParams{0.0}), NegativeParameter);
    CHECK_THROWS_AS(validate(ModelParams{1.0, 0.0, 0.0, -0.01}), NegativeParameter);
    CHECK_THROWS_AS(validate(ModelParams{1.0, 0.0, 0.0, 0.0, -0.01}), NegativeParameter);
    CHECK_THROWS_AS(validate(ModelParams{1.0, 0.0, 0.0, 0.0, 0.0, -0.1}), NegativeParameter);
    CHECK_THROWS_AS(validate(ModelParams{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.1}), NegativeParameter);
    CHECK_THROWS_AS(validate(ModelParams{1.0, 0.0, -0.1}), NegativeParameter);
    CHECK_THROWS(validate(ModelParams{std::numeric_limits<double>::quiet_NaN()}));
}

TEST_CASE("beam splitter coupling must leave both bare frequencies positive") {
    CHECK_THROWS_AS(validate(ModelParams{1.0, 1.0, 0.0}), StabilityViolation);
    CHECK_THROWS_AS(validate(ModelParams{1.0, 1.5, 0.0}), StabilityViolation);
}

TEST_CASE("validate is idempotent and the accepted region is open") {
    for (double k : {0.0, 0.1, 0.3, -0.3}) {
        for (double frac : {0.0, 0.5, 0.999}) {
            ModelParams p{1.0, k, frac * std::min(1.0 - k, 1.0 + k), 0.01, 0.02, 0.1, 0.0};
            CHECK(validate(validate(p)) == validate(p));
            p.lambda *= 0.9;
            CHECK_NOTHROW(validate(p));
        }
    }
}

TEST_CASE("initial state validation") {
    CHECK(validate(InitialState::vacuum()) == InitialState::vacuum());
    InitialState s;
    s.a.nbar = -0.1;
    CHECK_THROWS_AS(validate(s), NegativeParameter);
    s = {};
    s.b.squeeze_r = -0.2;
    CHECK_THROWS_AS(validate(s), NegativeParameter);
    s = {};
    s.a.squeeze_r = 0.3;
    s.a.squeeze_theta = 1.0;
    s.b.displacement = {0.1, -0.2};
    CHECK(validate(s) == s);
}

TEST_CASE("error categories map to exit codes") {
    CHECK(NegativeParameter("x").category() == ErrorCategory::Input);
    CHECK(StabilityViolation("x").category() == ErrorCategory::Stability);
    CHECK(PhysicalityLoss("x").category() == ErrorCategory::Numerical);
    CHECK(ConfigError(3, "kappa", "bad").line() == 3);
}

}
