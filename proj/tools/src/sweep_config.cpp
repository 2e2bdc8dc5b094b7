#include "sweep_config.hpp"

#include <cmath>
#include <fstream>

#include "mirrorfield/errors.hpp"

namespace mirrorfield::cli {

namespace {

const char* kModeNames[] = {"xi-map", "decay-sweep", "oracle-check", "scatter-demo", "validate"};

} // namespace

std::string to_string(Mode mode) {
    return kModeNames[static_cast<int>(mode)];
}

std::string to_string(OutputFormat format) {
    return format == OutputFormat::Csv ? "csv" : "json";
}

Mode mode_from_string(const std::string& name) {
    for (int i = 0; i < 5; ++i) {
        if (name == kModeNames[i]) {
            return static_cast<Mode>(i);
        }
    }
    throw ConfigError("unknown mode: " + name);
}

OutputFormat format_from_string(const std::string& name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw ConfigError("unknown output format: " + name);
}

std::vector<double> GridSpec::values() const {
    std::vector<double> out(count);
    if (log_spaced) {
        const double log_start = std::log(start);
        const double log_stop = std::log(stop);
        for (std::size_t i = 0; i < count; ++i) {
            const double f = static_cast<double>(i) / static_cast<double>(count - 1);
            out[i] = std::exp(log_start + f * (log_stop - log_start));
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const double f = static_cast<double>(i) / static_cast<double>(count - 1);
            out[i] = start + f * (stop - start);
        }
    }
    out.front() = start;  // pin the endpoints
    out.back() = stop;
    return out;
}

QuadratureSettings QuadratureSpec::settings() const {
    QuadratureSettings s;
    s.nodes = nodes;
    s.tolerance = convergence_tolerance;
    s.max_doublings = max_doublings;
    return s;
}

std::vector<double> SweepConfig::effective_xi() const {
    if (!xi_list.empty()) {
        return xi_list;
    }
    std::vector<double> out;
    out.reserve(mirrors.size());
    for (const MirrorPair& pair : mirrors) {
        MirrorSpec spec;
        spec.r_a = pair.r_a;
        spec.r_b = pair.r_b;
        out.push_back(mirror_parameter(spec).xi);
    }
    return out;
}

MirrorSpec SweepConfig::single_mirror() const {
    const MirrorPair pair = mirrors.empty() ? MirrorPair{} : mirrors.front();
    MirrorSpec spec;
    spec.r_a = pair.r_a;
    spec.r_b = pair.r_b;
    spec.t_a = t_a_override.value_or(std::sqrt(std::max(0.0, 1.0 - pair.r_a * pair.r_a)));
    spec.t_b = t_b_override.value_or(std::sqrt(std::max(0.0, 1.0 - pair.r_b * pair.r_b)));
    spec.phases = phases;
    return spec;
}

void SweepConfig::validate() const {
    if (grid.count < 2) {
        throw ConfigError("grid count must be >= 2");
    }
    if (!(grid.start >= 0.0) || !(grid.stop > grid.start)) {
        throw ConfigError("grid must satisfy stop > start >= 0");
    }
    if (grid.log_spaced && !(grid.start > 0.0)) {
        throw ConfigError("log-spaced grid needs start > 0");
    }
    for (double xi : xi_list) {
        if (!(xi >= 0.0 && xi <= 1.5)) {
            throw ConfigError("xi values must lie in [0, 1.5]");
        }
    }
    for (double mu : mu_list) {
        if (!(mu >= 0.0 && mu <= 1.0)) {
            throw ConfigError("mu values must lie in [0, 1]");
        }
    }
    for (const MirrorPair& pair : mirrors) {
        if (!(pair.r_a >= 0.0 && pair.r_a <= 1.0 && pair.r_b >= 0.0 && pair.r_b <= 1.0)) {
            throw ConfigError("mirror reflectances must lie in [0, 1]");
        }
    }
    if (xi_map_resolution < 2) {
        throw ConfigError("xi-map resolution must be >= 2");
    }
    if (!(tolerance > 0.0)) {
        throw ConfigError("tolerance must be > 0");
    }
    if (quadrature.nodes < 2 || !(quadrature.convergence_tolerance > 0.0)) {
        throw ConfigError("quadrature settings out of range");
    }
    if (mode == Mode::DecaySweep || mode == Mode::OracleCheck) {
        if (mu_list.empty()) {
            throw ConfigError("mu list must not be empty");
        }
        if (effective_xi().empty()) {
            throw ConfigError("either a xi list or mirror pairs are required");
        }
    }
    if (mode == Mode::ScatterDemo) {
        if (!(scenario.grid_half_width > 0.0) || scenario.grid_count < 2 ||
            scenario.grid_count % 2 != 0) {
            throw ConfigError("scenario grid must have positive extent and even count");
        }
        if (!(scenario.wave_speed > 0.0) || !(scenario.t_final > 0.0)) {
            throw ConfigError("scenario wave speed and t_final must be > 0");
        }
        for (const PacketSpec& packet : scenario.packets) {
            if (packet.side != "a" && packet.side != "b") {
                throw ConfigError("packet side must be 'a' or 'b'");
            }
            if (!(packet.sigma > 0.0)) {
                throw ConfigError("packet sigma must be > 0");
            }
        }
        for (double t : scenario.snapshot_times) {
            if (!(t >= 0.0)) {
                throw ConfigError("snapshot times must be >= 0");
            }
        }
    }
}

namespace {

template <typename T>
void read_into(const nlohmann::json& j, const char* key, T& value) {
    if (j.contains(key)) {
        j.at(key).get_to(value);
    }
}

GridSpec grid_from_json(const nlohmann::json& j) {
    GridSpec grid;
    read_into(j, "start", grid.start);
    read_into(j, "stop", grid.stop);
    read_into(j, "count", grid.count);
    if (j.contains("spacing")) {
        const std::string spacing = j.at("spacing").get<std::string>();
        if (spacing != "linear" && spacing != "log") {
            throw ConfigError("grid spacing must be 'linear' or 'log'");
        }
        grid.log_spaced = spacing == "log";
    }
    return grid;
}

MirrorPair pair_from_json(const nlohmann::json& j) {
    MirrorPair pair;
    read_into(j, "r_a", pair.r_a);
    read_into(j, "r_b", pair.r_b);
    return pair;
}

PacketSpec packet_from_json(const nlohmann::json& j) {
    PacketSpec packet;
    read_into(j, "side", packet.side);
    read_into(j, "center", packet.center);
    read_into(j, "sigma", packet.sigma);
    read_into(j, "amplitude", packet.amplitude);
    read_into(j, "phase", packet.phase);
    read_into(j, "carrier_k", packet.carrier_k);
    return packet;
}

} // namespace

SweepConfig config_from_json(const nlohmann::json& j) {
    SweepConfig config;
    try {
        if (j.contains("mode")) {
            config.mode = mode_from_string(j.at("mode").get<std::string>());
        }
        if (j.contains("mirror")) {
            const auto& m = j.at("mirror");
            config.mirrors = {pair_from_json(m)};
            if (m.contains("phases")) {
                m.at("phases").get_to(config.phases);
            }
            if (m.contains("t_a")) {
                config.t_a_override = m.at("t_a").get<double>();
            }
            if (m.contains("t_b")) {
                config.t_b_override = m.at("t_b").get<double>();
            }
        }
        if (j.contains("mirrors")) {
            config.mirrors.clear();
            for (const auto& entry : j.at("mirrors")) {
                config.mirrors.push_back(pair_from_json(entry));
            }
        }
        if (j.contains("phases")) {
            j.at("phases").get_to(config.phases);
        }
        read_into(j, "xi", config.xi_list);
        read_into(j, "mu", config.mu_list);
        if (j.contains("grid")) {
            config.grid = grid_from_json(j.at("grid"));
        }
        read_into(j, "resolution", config.xi_map_resolution);
        if (j.contains("output")) {
            const auto& out = j.at("output");
            read_into(out, "path", config.out_path);
            if (out.contains("format")) {
                config.format = format_from_string(out.at("format").get<std::string>());
            }
        }
        read_into(j, "tolerance", config.tolerance);
        if (j.contains("quadrature")) {
            const auto& q = j.at("quadrature");
            read_into(q, "nodes", config.quadrature.nodes);
            read_into(q, "convergence_tolerance", config.quadrature.convergence_tolerance);
            read_into(q, "max_doublings", config.quadrature.max_doublings);
        }
        if (j.contains("scenario")) {
            const auto& s = j.at("scenario");
            if (s.contains("grid")) {
                read_into(s.at("grid"), "half_width", config.scenario.grid_half_width);
                read_into(s.at("grid"), "count", config.scenario.grid_count);
            }
            read_into(s, "wave_speed", config.scenario.wave_speed);
            read_into(s, "t_final", config.scenario.t_final);
            if (s.contains("packets")) {
                config.scenario.packets.clear();
                for (const auto& entry : s.at("packets")) {
                    config.scenario.packets.push_back(packet_from_json(entry));
                }
            }
            read_into(s, "snapshot_times", config.scenario.snapshot_times);
            read_into(s, "snapshot_prefix", config.scenario.snapshot_prefix);
        }
        read_into(j, "force", config.force);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    return config;
}

nlohmann::ordered_json config_to_json(const SweepConfig& config) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(config.mode);
    j["mirrors"] = nlohmann::ordered_json::array();
    for (const MirrorPair& pair : config.mirrors) {
        j["mirrors"].push_back({{"r_a", pair.r_a}, {"r_b", pair.r_b}});
    }
    j["phases"] = config.phases;
    if (config.t_a_override) {
        j["mirror"]["t_a"] = *config.t_a_override;
    }
    if (config.t_b_override) {
        j["mirror"]["t_b"] = *config.t_b_override;
    }
    j["xi"] = config.xi_list;
    j["mu"] = config.mu_list;
    j["grid"] = {{"start", config.grid.start},
                 {"stop", config.grid.stop},
                 {"count", config.grid.count},
                 {"spacing", config.grid.log_spaced ? "log" : "linear"}};
    j["resolution"] = config.xi_map_resolution;
    j["output"] = {{"path", config.out_path}, {"format", to_string(config.format)}};
    j["tolerance"] = config.tolerance;
    j["quadrature"] = {{"nodes", config.quadrature.nodes},
                       {"convergence_tolerance", config.quadrature.convergence_tolerance},
                       {"max_doublings", config.quadrature.max_doublings}};
    nlohmann::ordered_json scenario;
    scenario["grid"] = {{"half_width", config.scenario.grid_half_width},
                        {"count", config.scenario.grid_count}};
    scenario["wave_speed"] = config.scenario.wave_speed;
    scenario["t_final"] = config.scenario.t_final;
    scenario["packets"] = nlohmann::ordered_json::array();
    for (const PacketSpec& packet : config.scenario.packets) {
        scenario["packets"].push_back({{"side", packet.side},
                                       {"center", packet.center},
                                       {"sigma", packet.sigma},
                                       {"amplitude", packet.amplitude},
                                       {"phase", packet.phase},
                                       {"carrier_k", packet.carrier_k}});
    }
    scenario["snapshot_times"] = config.scenario.snapshot_times;
    scenario["snapshot_prefix"] = config.scenario.snapshot_prefix;
    j["scenario"] = scenario;
    j["force"] = config.force;
    return j;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoFailure("cannot open config file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("cannot parse config: ") + e.what());
    }
    return config_from_json(j);
}

} // namespace mirrorfield::cli
