// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] must point at the CLI binary; the subprocess criteria are
// driven through it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "mirrorfield/decay.hpp"
#include "mirrorfield/mirror.hpp"
#include "mirrorfield/wavepacket.hpp"
#include "runners.hpp"
#include "sweep_config.hpp"

using namespace mirrorfield;
using namespace mirrorfield::cli;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

class Criterion {
public:
    explicit Criterion(std::string name)
        : name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}

    void require(bool condition, const std::string& detail) {
        if (!condition && ok_) {
            ok_ = false;
            detail_ = detail;
        }
    }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    void finish(double budget_seconds = 0.0) {
        const double elapsed = seconds();
        if (budget_seconds > 0.0 && elapsed > budget_seconds) {
            require(false, "runtime " + std::to_string(elapsed) + " s exceeds budget " +
                               std::to_string(budget_seconds) + " s");
        }
        if (ok_) {
            std::cout << "[PASS] " << name_ << " (" << elapsed << " s)\n";
        } else {
            std::cout << "[FAIL] " << name_ << ": " << detail_ << "\n";
            ++g_failures;
        }
    }

private:
    std::string name_;
    bool ok_ = true;
    std::string detail_;
    std::chrono::steady_clock::time_point start_;
};

std::filesystem::path work_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "mirrorfield_acceptance";
    std::filesystem::create_directories(dir);
    return dir;
}

int run_cli(const std::string& cli, const std::string& args) {
    const std::string log = (work_dir() / "cli.log").string();
    const std::string command = cli + " " + args + " > " + log + " 2>&1";
    const int status = std::system(command.c_str());
    if (status == -1) {
        return -1;
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// --- criterion 1: xi landscape over the reflectance square ----------------

void criterion_xi_landscape() {
    Criterion crit("criterion 1: xi landscape on a 101x101 reflectance grid");
    const Table table = make_xi_map(101);
    crit.require(table.rows.size() == 10201, "expected 10201 rows");
    for (const auto& row : table.rows) {
        const double r_a = row[0];
        const double r_b = row[1];
        const double xi = row[2];
        if (!(xi >= 0.0 && xi <= 1.5)) {
            crit.require(false, "xi out of [0, 1.5] at (" + std::to_string(r_a) + ", " +
                                    std::to_string(r_b) + ")");
            break;
        }
        if ((r_a == 0.0 || r_b == 0.0) && !(std::abs(xi) <= 1e-12)) {
            crit.require(false, "xi must vanish on the axes");
            break;
        }
        const bool corner = r_a == 1.0 && r_b == 1.0;
        if (corner && !(std::abs(xi - 1.5) <= 1e-12)) {
            crit.require(false, "xi must reach 1.5 at (1, 1)");
            break;
        }
        if (!corner && !(xi < 1.5 - 1e-12)) {
            crit.require(false, "xi reaches 1.5 away from (1, 1)");
            break;
        }
    }
    crit.finish(1.0);
}

// --- criterion 2: perfect-mirror contact limits ----------------------------

void criterion_contact_limits() {
    Criterion crit("criterion 2: perfect-mirror contact limits at u = 1e-6");
    const double parallel = relative_decay_rate(1e-6, 0.0, 1.5);
    const double perpendicular = relative_decay_rate(1e-6, 1.0, 1.5);
    crit.require(std::abs(parallel - 0.0) <= 1e-9,
                 "parallel contact limit off: " + std::to_string(parallel));
    crit.require(std::abs(perpendicular - 2.0) <= 1e-9,
                 "perpendicular contact limit off: " + std::to_string(perpendicular));
    crit.finish();
}

// --- criterion 3: free-space asymptote -------------------------------------

void criterion_free_space_asymptote() {
    Criterion crit("criterion 3: free-space asymptote for u >= 20");
    const double xi = 1.5;
    for (double mu : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const GridSpec grid{20.0, 1e4, 1000, true};
        for (double u : grid.values()) {
            const double deviation = std::abs(relative_decay_rate(u, mu, xi) - 1.0);
            if (!(deviation <= 2.0 * xi / u)) {
                crit.require(false, "envelope 2 xi / u violated at u = " + std::to_string(u) +
                                        ", mu = " + std::to_string(mu));
                break;
            }
        }
        const double tail = std::abs(relative_decay_rate(1e4, mu, xi) - 1.0);
        crit.require(tail <= 5e-4, "|ratio - 1| at u = 1e4 is " + std::to_string(tail));
    }
    crit.finish(1.0);
}

// --- criterion 4: oracle equivalence ----------------------------------------

void criterion_oracle_equivalence() {
    Criterion crit("criterion 4: closed form vs quadrature oracle to 1e-8");
    SweepConfig config;
    config.mode = Mode::OracleCheck;
    config.xi_list = {0.3, 0.75, 1.2, 1.5};
    config.mu_list = {0.0, 0.25, 0.5, 0.75, 1.0};
    config.grid = {0.1, 50.0, 40, true};
    config.quadrature.nodes = 128;
    config.tolerance = 1e-8;
    const OracleCheckOutcome outcome = make_oracle_check(config);
    crit.require(outcome.table.rows.size() == 800, "expected 800 grid points");
    crit.require(outcome.passed(), std::to_string(outcome.rows_failed) +
                                       " rows above tolerance, max |diff| = " +
                                       std::to_string(outcome.max_abs_diff));
    crit.finish(30.0);
}

// --- criterion 5: normalization identity ------------------------------------

void criterion_normalization_identity() {
    Criterion crit("criterion 5: normalization identity over 1e4 random mirrors");
    std::mt19937 rng(96321);
    std::uniform_real_distribution<double> unit(1e-9, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const MirrorSpec spec = build_mirror(unit(rng), unit(rng));
        const double residual = normalization_identity_residual(spec);
        if (!(residual <= 1e-12)) {
            crit.require(false, "residual " + std::to_string(residual) + " at (" +
                                    std::to_string(spec.r_a) + ", " + std::to_string(spec.r_b) +
                                    ")");
            break;
        }
    }
    crit.finish(1.0);
}

// --- criterion 6: energy conservation and the phase condition ---------------

void criterion_energy_conservation(const std::string& cli) {
    Criterion crit("criterion 6: scatter energy balance and phase-condition flagging");
    const double r = 1.0 / std::sqrt(2.0);

    SweepConfig balanced;
    balanced.mode = Mode::ScatterDemo;
    balanced.mirrors = {{r, r}};
    const ScatterDemoOutcome good = make_scatter_demo(balanced);
    crit.require(!good.blocked, "default phases were blocked");
    crit.require(good.ledger.relative_imbalance <= 1e-12,
                 "imbalance " + std::to_string(good.ledger.relative_imbalance));

    SweepConfig violating = balanced;
    violating.phases = {0.0, 0.0, 0.0, 0.0};
    violating.force = true;
    const ScatterDemoOutcome broken = make_scatter_demo(violating);
    crit.require(!broken.blocked, "--force must run the violating scenario");
    crit.require(broken.ledger.relative_imbalance > 1e-3,
                 "expected a visible imbalance, got " +
                     std::to_string(broken.ledger.relative_imbalance));

    // validate must flag the violation through the CLI exit code
    const std::string mirror_flags = "--r-a 0.707106781186547524 --r-b 0.707106781186547524";
    crit.require(run_cli(cli, "validate " + mirror_flags) == 0, "validate rejected a good spec");
    crit.require(run_cli(cli, "validate " + mirror_flags + " --phases 0,0,0,0") == 1,
                 "validate missed the phase violation");
    crit.require(run_cli(cli, "scatter-demo " + mirror_flags + " --phases 0,0,0,0") == 1,
                 "scatter-demo ran a violating spec without --force");

    const std::string ledger_path = (work_dir() / "forced_ledger.csv").string();
    crit.require(run_cli(cli, "scatter-demo " + mirror_flags +
                                  " --phases 0,0,0,0 --force --out " + ledger_path) == 0,
                 "scatter-demo --force failed");
    const std::string ledger = slurp(ledger_path);
    const auto header_end = ledger.find('\n');
    const auto last_comma = ledger.rfind(',');
    crit.require(header_end != std::string::npos && last_comma != std::string::npos,
                 "ledger csv malformed");
    const double forced_imbalance = std::strtod(ledger.c_str() + last_comma + 1, nullptr);
    crit.require(forced_imbalance > 1e-3, "forced run should report the imbalance");
    crit.finish(5.0);
}

// --- criterion 7: oscillation period and linearity in xi ---------------------

void criterion_oscillation_structure() {
    Criterion crit("criterion 7: extrema spacing 2 pi and linear xi scaling");
    const double du = 1e-4;
    for (double mu : {0.0, 1.0}) {
        std::vector<double> maxima;
        std::vector<double> minima;
        double prev = relative_decay_rate(10.0 - du, mu, 1.5) - 1.0;
        double here = relative_decay_rate(10.0, mu, 1.5) - 1.0;
        for (double u = 10.0 + du; u <= 60.0; u += du) {
            const double next = relative_decay_rate(u, mu, 1.5) - 1.0;
            if (here > prev && here >= next) {
                maxima.push_back(u - du);
            }
            if (here < prev && here <= next) {
                minima.push_back(u - du);
            }
            prev = here;
            here = next;
        }
        crit.require(maxima.size() >= 6 && minima.size() >= 6, "too few extrema found");
        for (const auto& extrema : {maxima, minima}) {
            for (std::size_t i = 1; i < extrema.size(); ++i) {
                const double spacing = extrema[i] - extrema[i - 1];
                if (!(std::abs(spacing - 2.0 * kPi) <= 0.1)) {
                    crit.require(false, "extrema spacing " + std::to_string(spacing) +
                                            " at mu = " + std::to_string(mu));
                    break;
                }
            }
        }
        // amplitudes at the extremal points scale linearly with xi
        for (const auto& extrema : {maxima, minima}) {
            for (double u : extrema) {
                const double strong = relative_decay_rate(u, mu, 1.5) - 1.0;
                const double weak = relative_decay_rate(u, mu, 0.75) - 1.0;
                if (!(std::abs(strong - 2.0 * weak) <= 1e-12)) {
                    crit.require(false, "xi linearity violated at extremum u = " +
                                            std::to_string(u));
                    break;
                }
            }
        }
    }
    crit.finish(1.0);
}

// --- criterion 8: byte-identical sweep outputs ------------------------------

void criterion_determinism(const std::string& cli) {
    Criterion crit("criterion 8: identical configs give byte-identical outputs");
    const auto dir = work_dir();
    const std::vector<std::pair<std::string, std::string>> runs = {
        {"xi_map", "xi-map --resolution 101"},
        {"decay_sweep",
         "decay-sweep --xi 0.75,1.5 --mu 0,1 --grid-start 0 --grid-stop 10 --grid-count 101"},
        {"oracle_check",
         "oracle-check --xi 1.5 --mu 0,1 --grid-start 0.5 --grid-stop 5 --grid-count 4 "
         "--nodes 64"},
        {"decay_sweep_json",
         "decay-sweep --xi 1.2 --mu 0.5 --grid-start 0 --grid-stop 5 --grid-count 11 "
         "--format json"},
        {"scatter_ledger", "scatter-demo --r-a 0.6 --r-b 0.8"},
    };
    for (const auto& [name, args] : runs) {
        const std::string first = (dir / (name + "_1.out")).string();
        const std::string second = (dir / (name + "_2.out")).string();
        const int rc1 = run_cli(cli, args + " --out " + first);
        const int rc2 = run_cli(cli, args + " --out " + second);
        if (rc1 != 0 || rc2 != 0) {
            crit.require(false, name + " exited with " + std::to_string(rc1) + "/" +
                                    std::to_string(rc2));
            continue;
        }
        const std::string a = slurp(first);
        const std::string b = slurp(second);
        crit.require(!a.empty() && a == b, name + " outputs differ between runs");
    }
    crit.finish();
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];

    criterion_xi_landscape();
    criterion_contact_limits();
    criterion_free_space_asymptote();
    criterion_oracle_equivalence();
    criterion_normalization_identity();
    criterion_energy_conservation(cli);
    criterion_oscillation_structure();
    criterion_determinism(cli);

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed\n";
    return 1;
}
