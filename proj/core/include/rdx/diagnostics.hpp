#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdx/grid.hpp"
#include "rdx/reaction_network.hpp"

namespace rdx {

/// One output-time row of the run log. The CSV serialization carries
/// t, per-species {min, max, mass, lp}, total mass, the mass-control
/// residual, and dt; acceptance bookkeeping stays in-process only.
struct LogRow {
    double t = 0.0;
    double dt = 0.0;
    std::vector<double> min_value;
    std::vector<double> max_value;  // discrete L-infinity per species
    std::vector<double> mass;
    std::vector<double> lp;
    double total_mass = 0.0;
    /// sum_i f_i - (C1 sum_i u_i + C2) evaluated at the cell with the
    /// largest sum_i u_i.
    double mass_control_residual = 0.0;
    double max_reaction_rate = 0.0;  // max_j |R_j| over cells
    std::int64_t steps_accepted = 0;  // cumulative at record time
    std::int64_t steps_rejected = 0;
};

struct DiagnosticsLog {
    std::vector<std::string> species_names;
    double lp_p = 2.0;
    std::vector<LogRow> rows;
};

struct Check {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double bound = 0.0;
    double tol = 0.0;
};

struct CheckReport {
    std::vector<Check> checks;
    std::uint64_t config_hash = 0;

    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Appends one row with every configured quantity. Values are recorded
/// faithfully (no clipping), so injected violations stay visible.
void record(DiagnosticsLog& log, const StateField& state, const ReactionNetwork& network,
            const MassCondition& condition, double dt, std::int64_t steps_accepted = 0,
            std::int64_t steps_rejected = 0);

struct VerifyOptions {
    double gronwall_rel_tol = 1e-6;
    double plateau_rel_tol = 1e-3;
    double steady_tol = 1e-10;  // equilibrium residual bound is 10x this
    bool run_reached_steady_state = false;
};

/// Evaluates the runtime invariants over a completed log: positivity,
/// the Gronwall mass envelope, the uniform-in-time plateau, space-time Lp
/// finiteness, and (for reversible networks that reached steady state)
/// the equilibrium residual.
CheckReport verify_invariants(const DiagnosticsLog& log, const ReactionNetwork& network,
                              const MassCondition& condition, const Grid& grid,
                              const BoundaryFlux& flux, const VerifyOptions& options = {});

/// Writes timeseries.csv, report.json, and snapshot_<t>.csv files into
/// out_dir (created if missing). Numbers are serialized with 17
/// significant digits so the CSV round-trips bit-exactly.
void write_outputs(const DiagnosticsLog& log, const CheckReport& report,
                   const std::vector<StateField>& snapshots,
                   const std::vector<std::string>& species_names, const std::string& out_dir);

/// CSV text of the log (the timeseries.csv payload).
std::string timeseries_csv(const DiagnosticsLog& log);

/// JSON text of the report (the report.json payload).
std::string report_json(const CheckReport& report);

}  // namespace rdx
