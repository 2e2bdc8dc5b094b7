#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "mirrorfield/errors.hpp"
#include "mirrorfield/mirror.hpp"

using namespace mirrorfield;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("build_mirror fills transmissions and default phases") {
    const MirrorSpec spec = build_mirror(0.6, 0.8);
    CHECK(spec.t_a == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(spec.t_b == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(spec.phases[0] == kPi);
    CHECK(spec.phases[1] == 0.0);
    CHECK(spec.phases[2] == 0.0);
    CHECK(spec.phases[3] == 0.0);
}

TEST_CASE("build_mirror perfect mirror has zero transmission") {
    const MirrorSpec spec = build_mirror(1.0, 1.0);
    CHECK(spec.t_a == 0.0);
    CHECK(spec.t_b == 0.0);
}

TEST_CASE("build_mirror rejects bad inputs") {
    CHECK_THROWS_AS(build_mirror(1.2, 0.5), OutOfRange);
    CHECK_THROWS_AS(build_mirror(0.5, -0.1), OutOfRange);
    CHECK_THROWS_AS(build_mirror(0.5, 0.5, {0.0, 0.0, 0.0, 0.0}), PhaseConditionViolated);
    const double nan = std::nan("");
    CHECK_THROWS_AS(build_mirror(nan, 0.5), OutOfRange);
}

TEST_CASE("phase condition residual measures distance to odd multiples of pi") {
    CHECK(phase_condition_residual({kPi, 0.0, 0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(phase_condition_residual({3.0 * kPi, 0.0, 0.0, 0.0}) < 1e-12);
    CHECK(phase_condition_residual({-kPi, 0.0, 0.0, 0.0}) < 1e-12);
    CHECK(phase_condition_residual({0.0, 0.0, 0.0, 0.0}) == doctest::Approx(kPi));
    CHECK(std::abs(phase_condition_residual({kPi + 1e-10, 0.0, 0.0, 0.0}) - 1e-10) < 1e-13);
    // sum pi with n = 0 split across entries
    CHECK(phase_condition_residual({kPi / 2.0, 0.0, kPi / 2.0, 0.0}) < 1e-12);
}

TEST_CASE("validate_mirror passes freshly built specs") {
    const ValidationReport report = validate_mirror(build_mirror(0.6, 0.8));
    REQUIRE(report.checks.size() == 3);
    CHECK(report.all_passed());
    for (const auto& check : report.checks) {
        CHECK(check.residual <= 1e-15);
    }
}

TEST_CASE("validate_mirror reports a tampered amplitude") {
    MirrorSpec spec = build_mirror(0.6, 0.8);
    spec.t_a = 0.9;  // breaks r_a^2 + t_a^2 = 1
    const ValidationReport report = validate_mirror(spec);
    CHECK_FALSE(report.all_passed());
    CHECK_FALSE(report.checks[0].passed);
    CHECK(report.checks[0].residual == doctest::Approx(0.17).epsilon(1e-12));
    CHECK(report.checks[1].passed);
    CHECK(report.checks[2].passed);
}

TEST_CASE("validate_mirror accepts any phases summing to an odd multiple of pi") {
    const MirrorSpec spec = build_mirror(0.5, 0.5, {kPi / 2.0, 0.0, kPi / 2.0, 0.0});
    CHECK(validate_mirror(spec).all_passed());
}

TEST_CASE("normalization factors at the symmetric point") {
    const NormalizationPair eta = normalization_factors(build_mirror(0.5, 0.5));
    CHECK(eta.eta_a * eta.eta_a == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(eta.eta_b * eta.eta_b == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("normalization factors at an asymmetric point") {
    // 1 + 0.36/0.64 = 1.5625 and 1 + 0.64/0.36 = 25/9
    const NormalizationPair eta = normalization_factors(build_mirror(0.6, 0.8));
    CHECK(eta.eta_a * eta.eta_a == doctest::Approx(1.5625).epsilon(1e-14));
    CHECK(eta.eta_b * eta.eta_b == doctest::Approx(25.0 / 9.0).epsilon(1e-14));
    CHECK(eta.eta_a == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(eta.eta_b == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("normalization factors reject vanishing reflectances") {
    CHECK_THROWS_AS(normalization_factors(build_mirror(0.0, 0.5)), OneSidedMirror);
    CHECK_THROWS_AS(normalization_factors(build_mirror(0.5, 0.0)), OneSidedMirror);
    CHECK_THROWS_AS(normalization_factors(build_mirror(0.0, 0.0)), FreeSpaceDegenerate);
}

TEST_CASE("normalization identity holds at spot-check points") {
    CHECK(normalization_identity_residual(build_mirror(0.5, 0.5)) <= 1e-15);
    CHECK(normalization_identity_residual(build_mirror(0.6, 0.8)) <= 1e-15);
    // (1 + 1)/2 + 0 = 1 at the perfect mirror
    CHECK(normalization_identity_residual(build_mirror(1.0, 1.0)) <= 1e-15);
}

TEST_CASE("normalization identity holds over random reflectance pairs") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> unit(1e-6, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const MirrorSpec spec = build_mirror(unit(rng), unit(rng));
        CHECK(normalization_identity_residual(spec) <= 1e-12);
        CHECK(validate_mirror(spec).all_passed());
    }
}

TEST_CASE("mirror parameter spot values") {
    CHECK(mirror_parameter(build_mirror(1.0, 1.0)).xi == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(mirror_parameter(build_mirror(0.0, 0.7)).xi == 0.0);
    CHECK(mirror_parameter(build_mirror(0.0, 0.0)).xi == 0.0);
    // 3 * 0.6 * 0.64 / (0.36 + 0.64)
    CHECK(mirror_parameter(build_mirror(0.6, 0.8)).xi == doctest::Approx(1.152).epsilon(1e-14));
}

TEST_CASE("mirror parameter reduces to 1.5 r on the diagonal") {
    for (double r : {0.2, 0.5, 0.9}) {
        CHECK(mirror_parameter(build_mirror(r, r)).xi ==
              doctest::Approx(1.5 * r).epsilon(1e-14));
    }
}

TEST_CASE("mirror parameter is not symmetric under side exchange") {
    const double forward = mirror_parameter(build_mirror(0.3, 0.9)).xi;
    const double swapped = mirror_parameter(build_mirror(0.9, 0.3)).xi;
    CHECK(forward == doctest::Approx(0.81).epsilon(1e-14));
    CHECK(swapped == doctest::Approx(0.27).epsilon(1e-14));
    CHECK(forward != swapped);
}

TEST_CASE("mirror parameter never exceeds 1.5 even within rounding of the corner") {
    double r_a = 1.0;
    for (int i = 0; i < 64; ++i) {
        double r_b = 1.0;
        for (int j = 0; j < 64; ++j) {
            const double xi = mirror_parameter(build_mirror(r_a, r_b)).xi;
            CHECK(xi <= 1.5);
            CHECK(xi >= 0.0);
            r_b = std::nextafter(r_b, 0.0);
        }
        r_a = std::nextafter(r_a, 0.0);
    }
}

TEST_CASE("mirror parameter stays in [0, 1.5] and peaks only at (1, 1)") {
    const int n = 101;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double r_a = static_cast<double>(i) / (n - 1);
            const double r_b = static_cast<double>(j) / (n - 1);
            const double xi = mirror_parameter(build_mirror(r_a, r_b)).xi;
            CHECK(xi >= 0.0);
            CHECK(xi <= 1.5);
            if (i != n - 1 || j != n - 1) {
                CHECK(xi < 1.5 - 1e-12);
            }
        }
    }
}
