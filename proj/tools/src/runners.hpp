#pragma once

#include <cstddef>
#include <iosfwd>

#include "mirrorfield/mirror.hpp"
#include "mirrorfield/wavepacket.hpp"
#include "sweep_config.hpp"
#include "table_writer.hpp"

namespace mirrorfield::cli {

// Rows (r_a, r_b, xi) over the [0,1]^2 reflectance grid, r_a outer.
Table make_xi_map(std::size_t resolution);

// Rows (xi, mu, kx, u, ratio) over xi x mu x kx grid, in that nesting order.
Table make_decay_sweep(const SweepConfig& config);

struct OracleCheckOutcome {
    Table table;  // rows (u, mu, xi, closed_form, oracle, abs_diff)
    std::size_t rows_failed = 0;
    double max_abs_diff = 0.0;

    bool passed() const { return rows_failed == 0; }
};

// Closed form against the quadrature oracle on xi x mu x u; rows whose
// |difference| exceeds config.tolerance (or whose quadrature fails to
// converge) count as failed. Rows are computed in parallel and emitted in
// grid order.
OracleCheckOutcome make_oracle_check(const SweepConfig& config);

struct ScatterDemoOutcome {
    ValidationReport mirror_report;
    bool blocked = false;  // phase condition failed and force was off
    EnergyLedger ledger;
};

// Builds the scenario packets, audits the energy balance, and writes the
// requested field snapshots. A failed phase condition blocks the run unless
// config.force is set; the imbalance itself is data, never an error.
ScatterDemoOutcome make_scatter_demo(const SweepConfig& config);

Table ledger_table(const EnergyLedger& ledger);
Table snapshot_table(const FieldState& state);

// Full subcommand dispatch including file output.
// Returns 0 on success, 1 on validation/tolerance failure.
int run_mode(const SweepConfig& config, std::ostream& out);

} // namespace mirrorfield::cli
