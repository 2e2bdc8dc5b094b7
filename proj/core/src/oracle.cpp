// Far-field cross-check of the closed-form decay rate.
//
// The rate modification of a dipole in front of a partially reflecting
// interface maps onto the textbook problem of two coherent point dipoles:
// the source, and an image of amplitude rho a round-trip phase u away along
// the normal. On the emitter side the radiated field is the coherent pair
// field; on the far side it is the transmitted fraction of the free field,
// carrying the remaining 1 - rho^2 of the intensity. The normalized outgoing
// power of that arrangement is the relative decay rate. Nothing here touches
// the sinc-family algebra of the closed form, so agreement between the two
// routes is a real check, not a tautology.

#include "mirrorfield/oracle.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mirrorfield/errors.hpp"
#include "mirrorfield/quadrature.hpp"

namespace mirrorfield {

namespace detail {

namespace {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

} // namespace

double pair_power_ratio_nodes(const ImagePairConfig& config, std::size_t nodes) {
    const GaussLegendreRule rule = gauss_legendre(nodes);

    // Azimuth: uniform nodes integrate the (degree <= 2) trig dependence
    // exactly; kept at the same count as the polar direction.
    const std::size_t m = nodes;
    const double phi_weight = 2.0 * std::numbers::pi / static_cast<double>(m);
    std::vector<double> cos_phi(m);
    std::vector<double> sin_phi(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double phi = phi_weight * static_cast<double>(j);
        cos_phi[j] = std::cos(phi);
        sin_phi[j] = std::sin(phi);
    }

    const bool perpendicular = config.orientation == Orientation::PerpendicularToMirror;
    // Unit source moment: along the normal (x) or in the mirror plane (z).
    const Vec3 source_moment = perpendicular ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 0.0, 1.0};
    // Image rule: normal component keeps its sign, tangential flips.
    const double image_sign = perpendicular ? 1.0 : -1.0;
    const double transmitted_fraction = 1.0 - config.rho * config.rho;

    double outgoing = 0.0;  // pair field on the emitter side + transmitted far side
    double isolated = 0.0;  // lone dipole over the full sphere

    for (int hemisphere = 0; hemisphere < 2; ++hemisphere) {
        const bool emitter_side = hemisphere == 0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            // Map [-1, 1] onto [0, 1] (emitter side) or [-1, 0].
            const double c = emitter_side ? 0.5 * (rule.nodes[i] + 1.0)
                                          : 0.5 * (rule.nodes[i] - 1.0);
            const double wc = 0.5 * rule.weights[i];
            const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            // Relative propagation phase between source and image along n.
            const std::complex<double> image_phase = std::polar(1.0, config.u * c);
            const std::complex<double> image_amp = image_sign * config.rho * image_phase;

            for (std::size_t j = 0; j < m; ++j) {
                const Vec3 n{c, s * cos_phi[j], s * sin_phi[j]};
                const double np = dot(n, source_moment);
                // Transverse projection of the moment: the far-field pattern.
                const Vec3 pattern{source_moment.x - np * n.x,
                                   source_moment.y - np * n.y,
                                   source_moment.z - np * n.z};
                const double pattern_sq = dot(pattern, pattern);
                const double w = wc * phi_weight;

                isolated += w * pattern_sq;
                if (emitter_side) {
                    // Coherent superposition of source and image far fields;
                    // both share the transverse pattern.
                    const std::complex<double> amp = 1.0 + image_amp;
                    outgoing += w * pattern_sq * std::norm(amp);
                } else {
                    outgoing += w * transmitted_fraction * pattern_sq;
                }
            }
        }
    }

    return outgoing / isolated;
}

} // namespace detail

double pair_power_ratio(const ImagePairConfig& config, const QuadratureSettings& settings) {
    if (!(config.u >= 0.0)) {
        throw OutOfRange("pair_power_ratio: u must be >= 0");
    }
    if (!(config.rho >= 0.0 && config.rho <= 1.0)) {
        throw OutOfRange("pair_power_ratio: rho must lie in [0, 1]");
    }
    if (settings.nodes < 2) {
        throw OutOfRange("pair_power_ratio: at least 2 nodes per dimension required");
    }
    if (!(settings.tolerance > 0.0)) {
        throw OutOfRange("pair_power_ratio: convergence tolerance must be > 0");
    }

    std::size_t nodes = settings.nodes;
    double previous = detail::pair_power_ratio_nodes(config, nodes);
    for (std::size_t d = 0; d < settings.max_doublings; ++d) {
        nodes *= 2;
        const double refined = detail::pair_power_ratio_nodes(config, nodes);
        if (std::abs(refined - previous) <= settings.tolerance) {
            return refined;
        }
        previous = refined;
    }
    throw QuadratureNotConverged(
        "pair_power_ratio: node doubling did not reach the requested tolerance");
}

double oracle_relative_decay(double u, double mu, double xi,
                             const QuadratureSettings& settings) {
    if (!(mu >= 0.0 && mu <= 1.0)) {
        throw OutOfRange("oracle_relative_decay: mu must lie in [0, 1]");
    }
    if (!(xi >= 0.0 && xi <= 1.5)) {
        throw OutOfRange("oracle_relative_decay: xi must lie in [0, 1.5]");
    }
    // Matching the perfect mirror (xi = 1.5 <-> full-strength image) fixes
    // the image amplitude as rho = 2 xi / 3.
    const double rho = 2.0 * xi / 3.0;
    const double parallel =
        pair_power_ratio({u, rho, Orientation::ParallelToMirror}, settings);
    const double perpendicular =
        pair_power_ratio({u, rho, Orientation::PerpendicularToMirror}, settings);
    return (1.0 - mu) * parallel + mu * perpendicular;
}

} // namespace mirrorfield
