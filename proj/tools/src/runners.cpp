#include "runners.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <limits>
#include <ostream>
#include <thread>

#include "mirrorfield/decay.hpp"
#include "mirrorfield/errors.hpp"
#include "mirrorfield/oracle.hpp"

namespace mirrorfield::cli {

namespace {

// Index-parallel map with a deterministic target layout: worker w handles a
// contiguous chunk, every slot is written exactly once.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t begin = w * chunk;
                const std::size_t end = std::min(count, begin + chunk);
                for (std::size_t i = begin; i < end; ++i) {
                    fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& thread : pool) {
        thread.join();
    }
    for (const auto& error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
}

WavePacket packet_from_spec(const SpatialGrid& grid, const PacketSpec& spec,
                            double wave_speed) {
    GaussianPulse pulse;
    pulse.center = spec.center;
    pulse.sigma = spec.sigma;
    pulse.amplitude = spec.amplitude;
    pulse.phase = spec.phase;
    const Side side = spec.side == "a" ? Side::A : Side::B;
    return WavePacket::gaussian(grid, side, Direction::TowardMirror, spec.carrier_k, pulse,
                                wave_speed);
}

std::vector<PacketSpec> default_packets() {
    PacketSpec a;
    a.side = "a";
    a.center = 10.0;
    PacketSpec b;
    b.side = "b";
    b.center = -10.0;
    return {a, b};
}

} // namespace

Table make_xi_map(std::size_t resolution) {
    Table table;
    table.columns = {"r_a", "r_b", "xi"};
    table.rows.reserve(resolution * resolution);
    const double step = 1.0 / static_cast<double>(resolution - 1);
    for (std::size_t i = 0; i < resolution; ++i) {
        const double r_a = static_cast<double>(i) * step;
        for (std::size_t j = 0; j < resolution; ++j) {
            const double r_b = static_cast<double>(j) * step;
            MirrorSpec spec;
            spec.r_a = r_a;
            spec.r_b = r_b;
            table.rows.push_back({r_a, r_b, mirror_parameter(spec).xi});
        }
    }
    return table;
}

Table make_decay_sweep(const SweepConfig& config) {
    Table table;
    table.columns = {"xi", "mu", "kx", "u", "ratio"};
    const std::vector<double> kx_values = config.grid.values();
    for (double xi : config.effective_xi()) {
        for (double mu : config.mu_list) {
            for (double kx : kx_values) {
                const double u = 2.0 * kx;
                table.rows.push_back({xi, mu, kx, u, relative_decay_rate(u, mu, xi)});
            }
        }
    }
    return table;
}

OracleCheckOutcome make_oracle_check(const SweepConfig& config) {
    struct Point {
        double u, mu, xi;
    };
    std::vector<Point> points;
    for (double xi : config.effective_xi()) {
        for (double mu : config.mu_list) {
            for (double u : config.grid.values()) {
                points.push_back({u, mu, xi});
            }
        }
    }

    OracleCheckOutcome outcome;
    outcome.table.columns = {"u", "mu", "xi", "closed_form", "oracle", "abs_diff"};
    outcome.table.rows.resize(points.size());

    const QuadratureSettings settings = config.quadrature.settings();
    parallel_for(points.size(), [&](std::size_t i) {
        const Point& p = points[i];
        const double closed = relative_decay_rate(p.u, p.mu, p.xi);
        double oracle = std::numeric_limits<double>::quiet_NaN();
        double diff = std::numeric_limits<double>::infinity();
        try {
            oracle = oracle_relative_decay(p.u, p.mu, p.xi, settings);
            diff = std::abs(closed - oracle);
        } catch (const QuadratureNotConverged&) {
            // surfaced as a failing row
        }
        outcome.table.rows[i] = {p.u, p.mu, p.xi, closed, oracle, diff};
    });

    for (const auto& row : outcome.table.rows) {
        const double diff = row[5];
        outcome.max_abs_diff = std::max(outcome.max_abs_diff, diff);
        if (!(diff <= config.tolerance)) {
            ++outcome.rows_failed;
        }
    }
    return outcome;
}

Table ledger_table(const EnergyLedger& ledger) {
    Table table;
    table.columns = {"input_side_a", "input_side_b", "output_side_a",
                     "output_side_b", "mirror_balance", "relative_imbalance"};
    table.rows.push_back({ledger.input_side_a, ledger.input_side_b, ledger.output_side_a,
                          ledger.output_side_b, ledger.mirror_balance,
                          ledger.relative_imbalance});
    return table;
}

Table snapshot_table(const FieldState& state) {
    Table table;
    table.columns = {"x", "re", "im", "intensity"};
    table.rows.reserve(state.samples.size());
    for (std::size_t i = 0; i < state.samples.size(); ++i) {
        const Complex value = state.samples[i];
        table.rows.push_back({state.grid.x(i), value.real(), value.imag(), std::norm(value)});
    }
    return table;
}

ScatterDemoOutcome make_scatter_demo(const SweepConfig& config) {
    ScatterDemoOutcome outcome;
    const MirrorSpec spec = config.single_mirror();
    outcome.mirror_report = validate_mirror(spec);
    if (!outcome.mirror_report.all_passed() && !config.force) {
        outcome.blocked = true;
        return outcome;
    }

    const ScenarioSpec& scenario = config.scenario;
    const SpatialGrid grid(scenario.grid_half_width, scenario.grid_count);
    const std::vector<PacketSpec> specs =
        scenario.packets.empty() ? default_packets() : scenario.packets;

    std::optional<WavePacket> packet_a;
    std::optional<WavePacket> packet_b;
    for (const PacketSpec& packet : specs) {
        auto& slot = packet.side == "a" ? packet_a : packet_b;
        if (slot) {
            throw ConfigError("scatter-demo supports one packet per side");
        }
        slot = packet_from_spec(grid, packet, scenario.wave_speed);
    }

    outcome.ledger = energy_audit(packet_a, packet_b, spec, scenario.t_final);

    if (!scenario.snapshot_prefix.empty()) {
        const auto parent = std::filesystem::path(scenario.snapshot_prefix).parent_path();
        if (!parent.empty()) {
            std::filesystem::create_directories(parent);
        }
        for (std::size_t i = 0; i < scenario.snapshot_times.size(); ++i) {
            const FieldState state = scatter(packet_a, packet_b, spec, scenario.snapshot_times[i]);
            const std::string path =
                scenario.snapshot_prefix + "_" + std::to_string(i) + ".csv";
            write_table(snapshot_table(state), path, OutputFormat::Csv);
        }
    }
    return outcome;
}

namespace {

void print_report(const ValidationReport& report, std::ostream& out) {
    for (const auto& check : report.checks) {
        out << check.name << ": " << (check.passed ? "PASS" : "FAIL")
            << " (residual " << format_value(check.residual) << ")\n";
    }
}

void print_ledger(const EnergyLedger& ledger, std::ostream& out) {
    out << "input  side a: " << format_value(ledger.input_side_a) << '\n'
        << "input  side b: " << format_value(ledger.input_side_b) << '\n'
        << "output side a: " << format_value(ledger.output_side_a) << '\n'
        << "output side b: " << format_value(ledger.output_side_b) << '\n'
        << "mirror balance: " << format_value(ledger.mirror_balance) << '\n'
        << "relative imbalance: " << format_value(ledger.relative_imbalance) << '\n';
}

} // namespace

int run_mode(const SweepConfig& config, std::ostream& out) {
    switch (config.mode) {
        case Mode::XiMap: {
            write_table(make_xi_map(config.xi_map_resolution), config.out_path, config.format);
            return 0;
        }
        case Mode::DecaySweep: {
            write_table(make_decay_sweep(config), config.out_path, config.format);
            return 0;
        }
        case Mode::OracleCheck: {
            const OracleCheckOutcome outcome = make_oracle_check(config);
            write_table(outcome.table, config.out_path, config.format);
            out << "oracle-check: " << outcome.table.rows.size() << " points, max |diff| "
                << format_value(outcome.max_abs_diff) << ", tolerance "
                << format_value(config.tolerance) << ", "
                << (outcome.passed() ? "PASS" : "FAIL") << '\n';
            return outcome.passed() ? 0 : 1;
        }
        case Mode::ScatterDemo: {
            const ScatterDemoOutcome outcome = make_scatter_demo(config);
            print_report(outcome.mirror_report, out);
            if (outcome.blocked) {
                out << "mirror validation failed; rerun with --force to proceed\n";
                return 1;
            }
            print_ledger(outcome.ledger, out);
            if (!config.out_path.empty()) {
                write_table(ledger_table(outcome.ledger), config.out_path, config.format);
            }
            return 0;
        }
        case Mode::Validate: {
            const ValidationReport report = validate_mirror(config.single_mirror());
            print_report(report, out);
            return report.all_passed() ? 0 : 1;
        }
    }
    return 2;
}

} // namespace mirrorfield::cli
