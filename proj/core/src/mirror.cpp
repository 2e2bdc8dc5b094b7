#include "mirrorfield/mirror.hpp"

#include <algorithm>
#include <cmath>

#include "mirrorfield/errors.hpp"

namespace mirrorfield {

namespace {

constexpr double kPi = std::numbers::pi;

bool in_unit_interval(double v) {
    return v >= 0.0 && v <= 1.0;
}

} // namespace

bool ValidationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidationCheck& c) { return c.passed; });
}

double phase_condition_residual(const std::array<double, 4>& phases) {
    const double sum = phases[0] - phases[1] + phases[2] - phases[3];
    // nearest odd integer multiple of pi
    const double m = sum / kPi;
    const double odd = 2.0 * std::round((m - 1.0) / 2.0) + 1.0;
    return std::abs(sum - odd * kPi);
}

MirrorSpec build_mirror(double r_a, double r_b) {
    return build_mirror(r_a, r_b, MirrorSpec::default_phases());
}

MirrorSpec build_mirror(double r_a, double r_b, const std::array<double, 4>& phases) {
    if (!in_unit_interval(r_a) || !in_unit_interval(r_b)) {
        throw OutOfRange("build_mirror: reflectances must lie in [0, 1]");
    }
    if (!(phase_condition_residual(phases) <= kPhaseTolerance)) {
        throw PhaseConditionViolated(
            "build_mirror: phi1 - phi2 + phi3 - phi4 must be an odd multiple of pi");
    }
    MirrorSpec spec;
    spec.r_a = r_a;
    spec.r_b = r_b;
    spec.t_a = std::sqrt(1.0 - r_a * r_a);
    spec.t_b = std::sqrt(1.0 - r_b * r_b);
    spec.phases = phases;
    return spec;
}

ValidationReport validate_mirror(const MirrorSpec& spec) {
    ValidationReport report;

    const double res_a = std::abs(spec.r_a * spec.r_a + spec.t_a * spec.t_a - 1.0);
    report.checks.push_back({"amplitude side a", res_a <= kAmplitudeTolerance, res_a});

    const double res_b = std::abs(spec.r_b * spec.r_b + spec.t_b * spec.t_b - 1.0);
    report.checks.push_back({"amplitude side b", res_b <= kAmplitudeTolerance, res_b});

    const double res_phase = phase_condition_residual(spec.phases);
    report.checks.push_back({"phase condition", res_phase <= kPhaseTolerance, res_phase});

    return report;
}

NormalizationPair normalization_factors(const MirrorSpec& spec) {
    const bool zero_a = spec.r_a == 0.0;
    const bool zero_b = spec.r_b == 0.0;
    if (zero_a && zero_b) {
        throw FreeSpaceDegenerate("normalization_factors: both reflectances are zero");
    }
    if (zero_a || zero_b) {
        throw OneSidedMirror("normalization_factors: one reflectance is zero");
    }
    const double qa = spec.r_a / spec.r_b;
    const double qb = spec.r_b / spec.r_a;
    return {std::sqrt(1.0 + qa * qa), std::sqrt(1.0 + qb * qb)};
}

double normalization_identity_residual(const MirrorSpec& spec) {
    const NormalizationPair eta = normalization_factors(spec);
    const double ea2 = eta.eta_a * eta.eta_a;
    const double eb2 = eta.eta_b * eta.eta_b;
    const double lhs_a = (1.0 + spec.r_a * spec.r_a) / ea2 + spec.t_b * spec.t_b / eb2;
    const double lhs_b = (1.0 + spec.r_b * spec.r_b) / eb2 + spec.t_a * spec.t_a / ea2;
    return std::max(std::abs(lhs_a - 1.0), std::abs(lhs_b - 1.0));
}

MirrorParameter mirror_parameter(const MirrorSpec& spec) {
    const double denom = spec.r_a * spec.r_a + spec.r_b * spec.r_b;
    if (denom == 0.0) {
        // 0/0 at the free-space corner; continuous along the diagonal.
        return {0.0};
    }
    // xi <= 1.5 holds exactly (equality only at r_a = r_b = 1); clamp the
    // ulp-level overshoot rounding can produce near that corner.
    return {std::min(3.0 * spec.r_a * spec.r_b * spec.r_b / denom, 1.5)};
}

} // namespace mirrorfield
