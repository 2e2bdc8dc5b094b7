#include "mirrorfield/wavepacket.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "mirrorfield/errors.hpp"

namespace mirrorfield {

SpatialGrid::SpatialGrid(double half_width, std::size_t count)
    : half_width_(half_width), count_(count), spacing_(2.0 * half_width / static_cast<double>(count)) {
    if (!(half_width > 0.0)) {
        throw OutOfRange("SpatialGrid: half width must be > 0");
    }
    if (count < 2 || count % 2 != 0) {
        throw OutOfRange("SpatialGrid: sample count must be even and >= 2");
    }
}

double GaussianPulse::unit_energy_amplitude(double sigma) {
    return std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
}

WavePacket::WavePacket(SpatialGrid grid, Side side, Direction direction, double carrier_k,
                       Profile profile, double support_lo, double support_hi,
                       double wave_speed, double emission_time)
    : grid_(grid),
      side_(side),
      direction_(direction),
      carrier_k_(carrier_k),
      profile_(std::move(profile)),
      support_lo_(support_lo),
      support_hi_(support_hi),
      wave_speed_(wave_speed),
      emission_time_(emission_time) {
    if (!profile_) {
        throw OutOfRange("WavePacket: profile must be callable");
    }
    if (!(support_lo_ < support_hi_)) {
        throw OutOfRange("WavePacket: empty support");
    }
    if (!(wave_speed_ > 0.0)) {
        throw OutOfRange("WavePacket: wave speed must be > 0");
    }
}

WavePacket WavePacket::gaussian(const SpatialGrid& grid, Side side, Direction direction,
                                double carrier_k, const GaussianPulse& pulse,
                                double wave_speed, double emission_time) {
    if (!(pulse.sigma > 0.0)) {
        throw OutOfRange("WavePacket::gaussian: sigma must be > 0");
    }
    if (!(pulse.amplitude >= 0.0)) {
        throw OutOfRange("WavePacket::gaussian: amplitude must be >= 0 (fold signs into phase)");
    }
    const double amplitude =
        pulse.amplitude == 0.0 ? GaussianPulse::unit_energy_amplitude(pulse.sigma)
                               : pulse.amplitude;

    // Carrier aligned with the propagation sense so the packet is a
    // unidirectional wave train.
    const double toward = direction == Direction::TowardMirror ? 1.0 : -1.0;
    const double sense = (side == Side::A ? -1.0 : 1.0) * toward;
    const double center = pulse.center;
    const double sigma = pulse.sigma;
    const double phase0 = pulse.phase;
    Profile profile = [amplitude, center, sigma, phase0, sense, carrier_k](double x) {
        const double arg = (x - center) / (2.0 * sigma);
        return std::polar(amplitude * std::exp(-arg * arg), phase0 + sense * carrier_k * x);
    };

    return WavePacket(grid, side, direction, carrier_k, std::move(profile),
                      center - kSupportSigmas * sigma, center + kSupportSigmas * sigma,
                      wave_speed, emission_time);
}

double WavePacket::signed_velocity() const {
    const double toward = direction_ == Direction::TowardMirror ? 1.0 : -1.0;
    return (side_ == Side::A ? -1.0 : 1.0) * toward * wave_speed_;
}

Complex WavePacket::field_at(double x, double t) const {
    const double origin_frame_x = x - signed_velocity() * (t - emission_time_);
    if (origin_frame_x < support_lo_ || origin_frame_x > support_hi_) {
        return {0.0, 0.0};
    }
    return profile_(origin_frame_x);
}

std::pair<double, double> WavePacket::support_at(double t) const {
    const double shift = signed_velocity() * (t - emission_time_);
    return {support_lo_ + shift, support_hi_ + shift};
}

std::vector<Complex> WavePacket::samples(double t) const {
    std::vector<Complex> out(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        out[i] = field_at(grid_.x(i), t);
    }
    return out;
}

double WavePacket::energy() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        sum += std::norm(field_at(grid_.x(i), emission_time_));
    }
    return sum * grid_.spacing();
}

bool WavePacket::on_origin_side() const {
    return side_ == Side::A ? support_lo_ >= 0.0 : support_hi_ <= 0.0;
}

WavePacket WavePacket::scaled(Complex factor) const {
    WavePacket copy = *this;
    Profile base = profile_;
    copy.profile_ = [base = std::move(base), factor](double x) { return factor * base(x); };
    return copy;
}

WavePacket propagate_free(const WavePacket& packet, double t) {
    if (!(t >= 0.0)) {
        throw OutOfRange("propagate_free: t must be >= 0");
    }
    const double shift = packet.signed_velocity() * t;
    const auto [lo, hi] = packet.support_at(packet.emission_time() + t);
    if (lo < -packet.grid().half_width() || hi > packet.grid().half_width()) {
        throw GridOverrun("propagate_free: translated support exits the grid");
    }

    // Bake the translation into the profile; the emission stamp stays put, so
    // the advanced packet reads as "the same packet observed t later".
    struct Shifted {
        Profile base;
        double shift;
        Complex operator()(double x) const { return base(x - shift); }
    };
    return WavePacket(packet.grid(), packet.origin_side(), packet.direction(),
                      packet.carrier_k(), Shifted{packet.profile(), shift},
                      lo, hi, packet.wave_speed(), packet.emission_time());
}

namespace {

void require_packet_roles(const std::optional<WavePacket>& packet_a,
                          const std::optional<WavePacket>& packet_b) {
    if (!packet_a && !packet_b) {
        throw std::invalid_argument("scatter: at least one packet required");
    }
    if (packet_a && packet_a->origin_side() != Side::A) {
        throw std::invalid_argument("scatter: first slot takes the side-a packet");
    }
    if (packet_b && packet_b->origin_side() != Side::B) {
        throw std::invalid_argument("scatter: second slot takes the side-b packet");
    }
    for (const auto* p : {&packet_a, &packet_b}) {
        if (*p && (*p)->direction() != Direction::TowardMirror) {
            throw std::invalid_argument("scatter: packets must move toward the mirror");
        }
        if (*p && !(*p)->on_origin_side()) {
            throw SideMismatch("scatter: packet support violates its origin label");
        }
    }
    if (packet_a && packet_b) {
        if (!(packet_a->grid() == packet_b->grid())) {
            throw std::invalid_argument("scatter: packets must share one grid");
        }
        if (packet_a->wave_speed() != packet_b->wave_speed()) {
            throw std::invalid_argument("scatter: packets must share one wave speed");
        }
    }
}

} // namespace

FieldState scatter(const std::optional<WavePacket>& packet_a,
                   const std::optional<WavePacket>& packet_b,
                   const MirrorSpec& spec, double t) {
    require_packet_roles(packet_a, packet_b);
    const SpatialGrid grid = packet_a ? packet_a->grid() : packet_b->grid();

    const auto field_a = [&](double x) {
        return packet_a ? packet_a->field_at(x, t) : Complex{0.0, 0.0};
    };
    const auto field_b = [&](double x) {
        return packet_b ? packet_b->field_at(x, t) : Complex{0.0, 0.0};
    };

    const Complex refl_a = spec.r_a * std::polar(1.0, spec.phases[0]);
    const Complex trans_b = spec.t_b * std::polar(1.0, spec.phases[1]);
    const Complex refl_b = spec.r_b * std::polar(1.0, spec.phases[2]);
    const Complex trans_a = spec.t_a * std::polar(1.0, spec.phases[3]);

    FieldState state{grid, t, std::vector<Complex>(grid.size())};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        if (x >= 0.0) {
            state.samples[i] = field_a(x) + refl_a * field_a(-x) + trans_b * field_b(x);
        } else {
            state.samples[i] = field_b(x) + refl_b * field_b(-x) + trans_a * field_a(x);
        }
    }
    return state;
}

double total_energy(const FieldState& state) {
    double sum = 0.0;
    for (const Complex& value : state.samples) {
        sum += std::norm(value);
    }
    return sum * state.grid.spacing();
}

EnergyLedger energy_audit(const std::optional<WavePacket>& packet_a,
                          const std::optional<WavePacket>& packet_b,
                          const MirrorSpec& spec, double t_final) {
    require_packet_roles(packet_a, packet_b);
    const SpatialGrid grid = packet_a ? packet_a->grid() : packet_b->grid();

    for (const auto* p : {&packet_a, &packet_b}) {
        if (!*p) {
            continue;
        }
        const auto [lo, hi] = (*p)->support_at(t_final);
        if (lo < -grid.half_width() || hi > grid.half_width()) {
            throw GridOverrun("energy_audit: packet support exits the grid before t_final");
        }
        // A toward-moving packet has fully scattered once its free-space
        // support lies entirely beyond the mirror plane.
        const bool cleared = (*p)->origin_side() == Side::A ? hi <= 0.0 : lo >= 0.0;
        if (!cleared) {
            throw ScatteringIncomplete("energy_audit: supports still straddle x = 0 at t_final");
        }
    }

    EnergyLedger ledger;
    ledger.input_side_a = packet_a ? packet_a->energy() : 0.0;
    ledger.input_side_b = packet_b ? packet_b->energy() : 0.0;

    const FieldState state = scatter(packet_a, packet_b, spec, t_final);
    double out_a = 0.0;
    double out_b = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double intensity = std::norm(state.samples[i]);
        (grid.x(i) >= 0.0 ? out_a : out_b) += intensity;
    }
    ledger.output_side_a = out_a * grid.spacing();
    ledger.output_side_b = out_b * grid.spacing();

    ledger.mirror_balance = ledger.input_total() - ledger.output_total();
    ledger.relative_imbalance =
        ledger.input_total() > 0.0 ? std::abs(ledger.mirror_balance) / ledger.input_total() : 0.0;
    return ledger;
}

} // namespace mirrorfield
