#pragma once

#include <array>
#include <numbers>
#include <string>
#include <vector>

namespace mirrorfield {

// Tolerances for the two mirror constraints. Amplitudes come out of pure
// arithmetic; phases are typically user-entered radians.
inline constexpr double kAmplitudeTolerance = 1e-12;
inline constexpr double kPhaseTolerance = 1e-9;

// Lossless two-sided interface at x = 0. Side a faces the x >= 0 half-space,
// side b the x < 0 half-space. Amplitudes are real fractions in [0, 1] with
// r^2 + t^2 = 1 per side; phase shifts picked up on reflection and
// transmission are carried separately.
//
// Phase ordering: phases[0] reflection on side a, phases[1] transmission
// b -> a, phases[2] reflection on side b, phases[3] transmission a -> b.
// Energy conservation constrains the combination
// phases[0] - phases[1] + phases[2] - phases[3] to an odd multiple of pi.
struct MirrorSpec {
    double r_a = 0.0;
    double r_b = 0.0;
    double t_a = 1.0;
    double t_b = 1.0;
    std::array<double, 4> phases = default_phases();

    // Reflection on side a picks up pi, every other channel none. Satisfies
    // the odd-multiple-of-pi condition with n = 0 and reproduces the
    // hard-mirror limit.
    static constexpr std::array<double, 4> default_phases() {
        return {std::numbers::pi, 0.0, 0.0, 0.0};
    }
};

// Normalization weights of the field observable; both are >= 1 and diverge
// as either reflectance vanishes.
struct NormalizationPair {
    double eta_a = 1.0;
    double eta_b = 1.0;
};

// Single dimensionless combination 3 r_a r_b^2 / (r_a^2 + r_b^2) controlling
// the decay-rate modification: 0 in free space, 1.5 at a perfect mirror.
struct MirrorParameter {
    double xi = 0.0;
};

struct ValidationCheck {
    std::string name;
    bool passed = false;
    double residual = 0.0;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const;
};

// Distance of phases[0] - phases[1] + phases[2] - phases[3] from the nearest
// odd multiple of pi.
double phase_condition_residual(const std::array<double, 4>& phases);

// Checked factory: transmissions follow from unitarity, phases default to
// (pi, 0, 0, 0).
// Throws OutOfRange for r outside [0, 1], PhaseConditionViolated when the
// supplied phases break the energy-conservation condition.
MirrorSpec build_mirror(double r_a, double r_b);
MirrorSpec build_mirror(double r_a, double r_b, const std::array<double, 4>& phases);

// Diagnostic pass over both unitarity constraints and the phase condition.
// Reports pass/fail with residual magnitudes; never throws.
ValidationReport validate_mirror(const MirrorSpec& spec);

// eta_a^2 = 1 + r_a^2/r_b^2, eta_b^2 = 1 + r_b^2/r_a^2.
// Throws OneSidedMirror / FreeSpaceDegenerate when a reflectance vanishes.
NormalizationPair normalization_factors(const MirrorSpec& spec);

// Residual of the large-distance normalization identity
//   (1 + r_a^2)/eta_a^2 + t_b^2/eta_b^2 = 1   (and a <-> b),
// as the max of the two deviations. Algebraically zero for any lossless spec.
double normalization_identity_residual(const MirrorSpec& spec);

// xi = 3 r_a r_b^2 / (r_a^2 + r_b^2); defined as 0 at r_a = r_b = 0 by
// continuity along the diagonal.
MirrorParameter mirror_parameter(const MirrorSpec& spec);

} // namespace mirrorfield
