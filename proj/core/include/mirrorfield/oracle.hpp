#pragma once

#include <cstddef>
#include <string>

namespace mirrorfield {

enum class Orientation {
    ParallelToMirror,
    PerpendicularToMirror,
};

// Real dipole plus its interface image, separated by the round-trip phase u
// along the mirror normal. The image carries amplitude rho relative to the
// source; its moment components parallel to the mirror are sign-flipped, the
// normal component keeps its sign. rho = 2 xi / 3 reproduces the perfect
// mirror at xi = 1.5.
struct ImagePairConfig {
    double u = 0.0;
    double rho = 0.0;
    Orientation orientation = Orientation::PerpendicularToMirror;
};

struct QuadratureSettings {
    std::size_t nodes = 128;              // per angular dimension
    std::string scheme = "gauss-legendre";
    double tolerance = 1e-10;             // agreement required between node doublings
    std::size_t max_doublings = 6;
};

// Outgoing far-field power of the dipole-image arrangement over the isolated
// dipole power, by solid-angle quadrature of the radiated intensity: the
// coherent pair field on the emitter hemisphere plus the transmitted
// (1 - rho^2)-weighted free field on the far hemisphere. Gauss-Legendre in
// cos(theta) per hemisphere, uniform in azimuth; node counts are doubled
// until two successive results agree to settings.tolerance.
// Throws QuadratureNotConverged when max_doublings is exhausted.
double pair_power_ratio(const ImagePairConfig& config, const QuadratureSettings& settings = {});

// Orientation mix (1 - mu) * parallel + mu * perpendicular at rho = 2 xi / 3:
// an independent reconstruction of the closed-form relative decay rate.
double oracle_relative_decay(double u, double mu, double xi,
                             const QuadratureSettings& settings = {});

namespace detail {

// Single quadrature pass at a fixed node count, no convergence control.
double pair_power_ratio_nodes(const ImagePairConfig& config, std::size_t nodes);

} // namespace detail

} // namespace mirrorfield
