#include "mirrorfield/decay.hpp"

#include <cmath>

#include "mirrorfield/errors.hpp"

namespace mirrorfield {

namespace detail {

double sinc_direct(double u) {
    return std::sin(u) / u;
}

double sinc_series(double u) {
    // sum of (-1)^m u^(2m) / (2m + 1)!
    const double u2 = u * u;
    double term = 1.0;
    double sum = term;
    for (int m = 0; m < 32; ++m) {
        term *= -u2 / ((2.0 * m + 2.0) * (2.0 * m + 3.0));
        if (std::abs(term) < kSeriesTermFloor) {
            break;
        }
        sum += term;
    }
    return sum;
}

double sinc(double u) {
    return u < kSeriesCrossover ? sinc_series(u) : sinc_direct(u);
}

double j1_over_u_direct(double u) {
    return (std::sin(u) / u - std::cos(u)) / (u * u);
}

double j1_over_u_series(double u) {
    // sum of (-1)^(m+1) 2m u^(2m-2) / (2m + 1)!  =  1/3 - u^2/30 + u^4/840 - ...
    const double u2 = u * u;
    double term = 1.0 / 3.0;
    double sum = term;
    for (int m = 1; m < 32; ++m) {
        term *= -((m + 1.0) / m) * u2 / ((2.0 * m + 2.0) * (2.0 * m + 3.0));
        if (std::abs(term) < kSeriesTermFloor) {
            break;
        }
        sum += term;
    }
    return sum;
}

double j1_over_u(double u) {
    return u < kSeriesCrossover ? j1_over_u_series(u) : j1_over_u_direct(u);
}

} // namespace detail

namespace {

void require_rate_arguments(double u, double mu, double xi) {
    if (!(u >= 0.0)) {
        throw OutOfRange("relative_decay_rate: u must be >= 0");
    }
    if (!(mu >= 0.0 && mu <= 1.0)) {
        throw OutOfRange("relative_decay_rate: mu must lie in [0, 1]");
    }
    if (!(xi >= 0.0 && xi <= 1.5)) {
        throw OutOfRange("relative_decay_rate: xi must lie in [0, 1.5]");
    }
}

void require_emitter(const EmitterConfig& emitter) {
    if (!(emitter.k > 0.0)) {
        throw OutOfRange("emitter: k must be > 0");
    }
    if (!(emitter.x >= 0.0)) {
        throw OutOfRange("emitter: x must be >= 0");
    }
    if (!(emitter.mu >= 0.0 && emitter.mu <= 1.0)) {
        throw OutOfRange("emitter: mu must lie in [0, 1]");
    }
    if (!(emitter.gamma_free > 0.0)) {
        throw OutOfRange("emitter: gamma_free must be > 0");
    }
}

} // namespace

double relative_decay_rate(double u, double mu, double xi) {
    require_rate_arguments(u, mu, xi);
    const double radial = detail::j1_over_u(u);  // -(cos u / u^2 - sin u / u^3)
    const double lateral = detail::sinc(u);
    return 1.0 + xi * radial * (1.0 + mu) - xi * lateral * (1.0 - mu);
}

double contact_limit(double mu, double xi) {
    require_rate_arguments(0.0, mu, xi);
    return 1.0 + (2.0 * xi / 3.0) * (2.0 * mu - 1.0);
}

DecayResult decay_rate(const EmitterConfig& emitter, const MirrorSpec& spec) {
    require_emitter(emitter);
    const double u = 2.0 * emitter.k * emitter.x;
    const double ratio = relative_decay_rate(u, emitter.mu, mirror_parameter(spec).xi);
    return {ratio, ratio * emitter.gamma_free, u};
}

DecayCurve decay_curve(const EmitterConfig& emitter_base, const MirrorSpec& spec,
                       const std::vector<double>& kx_grid) {
    require_emitter(emitter_base);
    for (std::size_t i = 0; i < kx_grid.size(); ++i) {
        if (!(kx_grid[i] >= 0.0)) {
            throw OutOfRange("decay_curve: kx grid values must be >= 0");
        }
        if (i > 0 && !(kx_grid[i] > kx_grid[i - 1])) {
            throw NonMonotonicGrid("decay_curve: kx grid must be strictly increasing");
        }
    }

    DecayCurve curve;
    curve.xi = mirror_parameter(spec).xi;
    curve.mu = emitter_base.mu;
    curve.samples.reserve(kx_grid.size());
    for (double kx : kx_grid) {
        const double u = 2.0 * kx;
        curve.samples.push_back({kx, u, relative_decay_rate(u, curve.mu, curve.xi)});
    }
    return curve;
}

} // namespace mirrorfield
