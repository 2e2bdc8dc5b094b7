#pragma once

#include <vector>

#include "mirrorfield/mirror.hpp"

namespace mirrorfield {

// Emitting dipole in the x >= 0 half-space (side a of the mirror).
struct EmitterConfig {
    double k = 1.0;           // transition wavenumber, > 0
    double x = 0.0;           // distance from the interface, >= 0
    double mu = 0.0;          // normal component of the unit transition dipole, in [0, 1]
    double gamma_free = 1.0;  // free-space decay rate, > 0
};

struct DecayResult {
    double ratio = 1.0;       // gamma_mirr / gamma_free
    double gamma_mirr = 0.0;
    double u = 0.0;           // round-trip phase 2 k x
};

struct DecayCurveSample {
    double kx = 0.0;
    double u = 0.0;
    double ratio = 1.0;
};

struct DecayCurve {
    double xi = 0.0;
    double mu = 0.0;
    std::vector<DecayCurveSample> samples;
};

// Relative decay rate at round-trip phase u = 2 k x:
//
//   ratio = 1 - xi (cos u / u^2 - sin u / u^3)(1 + mu) - xi (sin u / u)(1 - mu)
//
// Both sinc-family factors switch to Maclaurin series below a small-argument
// crossover, so u = 0 is an ordinary point and the contact limit comes out of
// the same expression. Throws OutOfRange outside u >= 0, mu in [0, 1],
// xi in [0, 1.5].
double relative_decay_rate(double u, double mu, double xi);

// Analytic u -> 0 limit, 1 + (2 xi / 3)(2 mu - 1).
double contact_limit(double mu, double xi);

// Rate for a concrete emitter and mirror; xi is derived from the spec.
DecayResult decay_rate(const EmitterConfig& emitter, const MirrorSpec& spec);

// Samples the relative rate over a strictly increasing kx grid (all >= 0).
// mu and gamma_free come from emitter_base; its own k and x are not used.
DecayCurve decay_curve(const EmitterConfig& emitter_base, const MirrorSpec& spec,
                       const std::vector<double>& kx_grid);

namespace detail {

// Below this u both factors are evaluated by series; the branches agree to
// well under 1e-9 at the crossover.
inline constexpr double kSeriesCrossover = 0.05;
// Series terms are accumulated until the next one drops below this.
inline constexpr double kSeriesTermFloor = 1e-16;

// sin(u)/u. The direct form is fine away from 0; the series avoids 0/0.
double sinc(double u);
double sinc_series(double u);
double sinc_direct(double u);

// j1(u)/u = sin(u)/u^3 - cos(u)/u^2. The direct form loses ~3 digits per
// decade as u -> 0 through cancellation of two O(1/u^2) terms; the series
// (1/3 - u^2/30 + u^4/840 - ...) is exact there.
double j1_over_u(double u);
double j1_over_u_series(double u);
double j1_over_u_direct(double u);

} // namespace detail

} // namespace mirrorfield
