#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mirrorfield/mirror.hpp"
#include "mirrorfield/oracle.hpp"

namespace mirrorfield::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Mode { XiMap, DecaySweep, OracleCheck, ScatterDemo, Validate };
enum class OutputFormat { Csv, Json };

std::string to_string(Mode mode);
std::string to_string(OutputFormat format);
Mode mode_from_string(const std::string& name);
OutputFormat format_from_string(const std::string& name);

// One sweep axis: kx for decay-sweep, u for oracle-check.
struct GridSpec {
    double start = 0.0;
    double stop = 10.0;
    std::size_t count = 201;
    bool log_spaced = false;

    std::vector<double> values() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct MirrorPair {
    double r_a = 1.0;
    double r_b = 1.0;

    friend bool operator==(const MirrorPair&, const MirrorPair&) = default;
};

struct PacketSpec {
    std::string side = "a";
    double center = 10.0;
    double sigma = 1.0;
    double amplitude = 0.0;  // 0 selects unit energy
    double phase = 0.0;
    double carrier_k = 20.0;

    friend bool operator==(const PacketSpec&, const PacketSpec&) = default;
};

struct ScenarioSpec {
    double grid_half_width = 40.0;
    std::size_t grid_count = 4096;
    double wave_speed = 1.0;
    double t_final = 25.0;
    std::vector<PacketSpec> packets;  // empty -> symmetric two-sided default
    std::vector<double> snapshot_times;
    std::string snapshot_prefix;

    friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

struct QuadratureSpec {
    std::size_t nodes = 128;
    double convergence_tolerance = 1e-10;
    std::size_t max_doublings = 6;

    QuadratureSettings settings() const;

    friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

struct SweepConfig {
    Mode mode = Mode::DecaySweep;

    // Mirrors either as reflectance pairs or as a direct xi list.
    std::vector<MirrorPair> mirrors;
    std::vector<double> xi_list;
    std::array<double, 4> phases = MirrorSpec::default_phases();
    std::optional<double> t_a_override;  // validate-mode diagnostics only
    std::optional<double> t_b_override;

    std::vector<double> mu_list{0.0, 1.0};
    GridSpec grid;
    std::size_t xi_map_resolution = 101;

    std::string out_path;  // empty -> stdout
    OutputFormat format = OutputFormat::Csv;
    double tolerance = 1e-8;  // oracle-check pass threshold on |closed - oracle|
    QuadratureSpec quadrature;
    ScenarioSpec scenario;
    bool force = false;

    // xi values driving a sweep: the explicit list, or the mirror pairs
    // mapped through the mirror parameter.
    std::vector<double> effective_xi() const;

    // First configured mirror with the configured phases (and optional
    // transmission overrides); used by validate and scatter-demo.
    MirrorSpec single_mirror() const;

    void validate() const;  // throws ConfigError

    friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

SweepConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const SweepConfig& config);

// Throws IoFailure when the file cannot be read, ConfigError on bad content.
SweepConfig load_config(const std::string& path);

} // namespace mirrorfield::cli
