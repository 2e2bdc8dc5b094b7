#include <array>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mirrorfield/errors.hpp"
#include "runners.hpp"
#include "sweep_config.hpp"

namespace {

using namespace mirrorfield::cli;

// Flag storage for one subcommand; options are applied over the config file
// only when actually given on the command line.
struct Flags {
    std::string config_path;
    std::string out_path;
    std::string format;
    double tolerance = 0.0;
    bool force = false;

    double r_a = 0.0;
    double r_b = 0.0;
    double t_a = 0.0;
    double t_b = 0.0;
    std::vector<double> phases;
    std::vector<double> xi;
    std::vector<double> mu;
    double grid_start = 0.0;
    double grid_stop = 0.0;
    std::size_t grid_count = 0;
    std::string grid_spacing;
    std::size_t resolution = 0;
    std::size_t nodes = 0;
    double t_final = 0.0;
    std::string sides;
    std::string snapshot_prefix;
    std::vector<double> snapshot_times;
};

struct SubcommandOptions {
    CLI::App* app = nullptr;
    Flags flags;
    Mode mode = Mode::DecaySweep;
};

void add_common_options(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file; flags override its values");
    cmd->add_option("--out", flags.out_path, "output file (default: stdout)");
    cmd->add_option("--format", flags.format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--tolerance", flags.tolerance, "pass threshold where applicable");
    cmd->add_flag("--force", flags.force, "run even if mirror validation fails");
}

void add_mirror_options(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--r-a", flags.r_a, "reflectance of side a");
    cmd->add_option("--r-b", flags.r_b, "reflectance of side b");
    cmd->add_option("--phases", flags.phases, "phi1,phi2,phi3,phi4 in radians")
        ->delimiter(',')
        ->expected(4);
}

bool given(const CLI::App* cmd, const std::string& name) {
    const CLI::Option* option = cmd->get_option_no_throw(name);
    return option != nullptr && option->count() > 0;
}

// Subcommand presets used when no config file pins them down; flags still
// override. oracle-check defaults to the standard verification grid.
void apply_mode_defaults(SweepConfig& config, Mode mode) {
    if (mode == Mode::OracleCheck) {
        config.grid = {0.1, 50.0, 40, true};
        config.mu_list = {0.0, 0.5, 1.0};
        config.xi_list = {0.75, 1.5};
    } else if (mode == Mode::DecaySweep) {
        config.xi_list = {0.75, 1.5};
    }
}

SweepConfig assemble_config(const CLI::App* cmd, const Flags& flags, Mode mode) {
    SweepConfig config;
    if (flags.config_path.empty()) {
        apply_mode_defaults(config, mode);
    } else {
        config = load_config(flags.config_path);
    }
    config.mode = mode;

    if (given(cmd, "--out")) {
        config.out_path = flags.out_path;
    }
    if (given(cmd, "--format")) {
        config.format = format_from_string(flags.format);
    }
    if (given(cmd, "--tolerance")) {
        config.tolerance = flags.tolerance;
    }
    if (given(cmd, "--force")) {
        config.force = true;
    }
    if (given(cmd, "--r-a") || given(cmd, "--r-b")) {
        MirrorPair pair = config.mirrors.empty() ? MirrorPair{} : config.mirrors.front();
        if (given(cmd, "--r-a")) {
            pair.r_a = flags.r_a;
        }
        if (given(cmd, "--r-b")) {
            pair.r_b = flags.r_b;
        }
        config.mirrors = {pair};
        if (!given(cmd, "--xi")) {
            config.xi_list.clear();  // an explicit pair beats the preset xi list
        }
    }
    if (given(cmd, "--t-a")) {
        config.t_a_override = flags.t_a;
    }
    if (given(cmd, "--t-b")) {
        config.t_b_override = flags.t_b;
    }
    if (given(cmd, "--phases")) {
        config.phases = {flags.phases[0], flags.phases[1], flags.phases[2], flags.phases[3]};
    }
    if (given(cmd, "--xi")) {
        config.xi_list = flags.xi;
    }
    if (given(cmd, "--mu")) {
        config.mu_list = flags.mu;
    }
    if (given(cmd, "--grid-start")) {
        config.grid.start = flags.grid_start;
    }
    if (given(cmd, "--grid-stop")) {
        config.grid.stop = flags.grid_stop;
    }
    if (given(cmd, "--grid-count")) {
        config.grid.count = flags.grid_count;
    }
    if (given(cmd, "--grid-spacing")) {
        config.grid.log_spaced = flags.grid_spacing == "log";
    }
    if (given(cmd, "--resolution")) {
        config.xi_map_resolution = flags.resolution;
    }
    if (given(cmd, "--nodes")) {
        config.quadrature.nodes = flags.nodes;
    }
    if (given(cmd, "--t-final")) {
        config.scenario.t_final = flags.t_final;
    }
    if (given(cmd, "--snapshot-prefix")) {
        config.scenario.snapshot_prefix = flags.snapshot_prefix;
    }
    if (given(cmd, "--snapshot-times")) {
        config.scenario.snapshot_times = flags.snapshot_times;
    }
    if (given(cmd, "--sides")) {
        std::vector<PacketSpec> packets;
        PacketSpec a;
        a.side = "a";
        a.center = 10.0;
        PacketSpec b;
        b.side = "b";
        b.center = -10.0;
        if (flags.sides == "ab" || flags.sides == "a") {
            packets.push_back(a);
        }
        if (flags.sides == "ab" || flags.sides == "b") {
            packets.push_back(b);
        }
        config.scenario.packets = packets;
    }
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decay rates and classical field mapping near a two-sided "
                 "semi-transparent mirror"};
    app.require_subcommand(1);

    std::vector<SubcommandOptions> subcommands(5);

    {
        SubcommandOptions& sub = subcommands[0];
        sub.mode = Mode::XiMap;
        sub.app = app.add_subcommand("xi-map", "mirror parameter over the reflectance square");
        add_common_options(sub.app, sub.flags);
        sub.app->add_option("--resolution", sub.flags.resolution, "grid points per axis");
    }
    {
        SubcommandOptions& sub = subcommands[1];
        sub.mode = Mode::DecaySweep;
        sub.app = app.add_subcommand("decay-sweep", "relative decay rate over a kx grid");
        add_common_options(sub.app, sub.flags);
        add_mirror_options(sub.app, sub.flags);
        sub.app->add_option("--xi", sub.flags.xi, "xi values (overrides mirror pairs)")
            ->delimiter(',');
        sub.app->add_option("--mu", sub.flags.mu, "dipole orientation values")->delimiter(',');
        sub.app->add_option("--grid-start", sub.flags.grid_start, "first kx");
        sub.app->add_option("--grid-stop", sub.flags.grid_stop, "last kx");
        sub.app->add_option("--grid-count", sub.flags.grid_count, "kx sample count");
        sub.app->add_option("--grid-spacing", sub.flags.grid_spacing, "linear | log")
            ->check(CLI::IsMember({"linear", "log"}));
    }
    {
        SubcommandOptions& sub = subcommands[2];
        sub.mode = Mode::OracleCheck;
        sub.app = app.add_subcommand("oracle-check",
                                     "closed form vs far-field quadrature oracle");
        add_common_options(sub.app, sub.flags);
        sub.app->add_option("--xi", sub.flags.xi, "xi values")->delimiter(',');
        sub.app->add_option("--mu", sub.flags.mu, "dipole orientation values")->delimiter(',');
        sub.app->add_option("--grid-start", sub.flags.grid_start, "first u");
        sub.app->add_option("--grid-stop", sub.flags.grid_stop, "last u");
        sub.app->add_option("--grid-count", sub.flags.grid_count, "u sample count");
        sub.app->add_option("--grid-spacing", sub.flags.grid_spacing, "linear | log")
            ->check(CLI::IsMember({"linear", "log"}));
        sub.app->add_option("--nodes", sub.flags.nodes, "quadrature nodes per dimension");
    }
    {
        SubcommandOptions& sub = subcommands[3];
        sub.mode = Mode::ScatterDemo;
        sub.app = app.add_subcommand("scatter-demo",
                                     "1D wave-packet scattering with an energy ledger");
        add_common_options(sub.app, sub.flags);
        add_mirror_options(sub.app, sub.flags);
        sub.app->add_option("--t-final", sub.flags.t_final, "audit time");
        sub.app->add_option("--sides", sub.flags.sides, "packets to launch: ab | a | b")
            ->check(CLI::IsMember({"ab", "a", "b"}));
        sub.app->add_option("--snapshot-prefix", sub.flags.snapshot_prefix,
                            "write field snapshots <prefix>_<i>.csv");
        sub.app->add_option("--snapshot-times", sub.flags.snapshot_times,
                            "times at which to dump the field")
            ->delimiter(',');
    }
    {
        SubcommandOptions& sub = subcommands[4];
        sub.mode = Mode::Validate;
        sub.app = app.add_subcommand("validate", "check the mirror constraints");
        add_common_options(sub.app, sub.flags);
        add_mirror_options(sub.app, sub.flags);
        sub.app->add_option("--t-a", sub.flags.t_a, "override transmission of side a");
        sub.app->add_option("--t-b", sub.flags.t_b, "override transmission of side b");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (const SubcommandOptions& sub : subcommands) {
            if (!sub.app->parsed()) {
                continue;
            }
            SweepConfig config = assemble_config(sub.app, sub.flags, sub.mode);
            config.validate();
            return run_mode(config, std::cout);
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const mirrorfield::IoFailure& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
