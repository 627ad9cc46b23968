#include "rdx/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rdx/diffusion.hpp"
#include "rdx/theory.hpp"

#ifndef RDX_GIT_DESCRIBE
#define RDX_GIT_DESCRIBE "unknown"
#endif

namespace rdx {

namespace {

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void record(DiagnosticsLog& log, const StateField& state, const ReactionNetwork& network,
            const MassCondition& condition, double dt, std::int64_t steps_accepted,
            std::int64_t steps_rejected) {
    const Grid& grid = state.grid;
    const int I = state.num_species;
    const int cells = grid.cell_count();

    LogRow row;
    row.t = state.time;
    row.dt = dt;
    row.steps_accepted = steps_accepted;
    row.steps_rejected = steps_rejected;
    row.min_value.resize(I);
    row.max_value.resize(I);
    row.mass.resize(I);
    row.lp.resize(I);

    for (int s = 0; s < I; ++s) {
        auto u = state.species(s);
        double lo = u[0], hi = u[0], m = 0.0;
        for (double v : u) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            m += v;
        }
        row.min_value[s] = lo;
        row.max_value[s] = hi;
        row.mass[s] = m * grid.cell_volume();
        row.lp[s] = spatial_lp(u, grid, log.lp_p);
        row.total_mass += row.mass[s];
    }

    // Worst cell for the mass-control residual: largest sum_i u_i.
    int worst = 0;
    double worst_sum = -1.0;
    for (int c = 0; c < cells; ++c) {
        double su = 0.0;
        for (int s = 0; s < I; ++s) su += state.at(s, c);
        if (su > worst_sum) {
            worst_sum = su;
            worst = c;
        }
    }
    std::vector<double> u_cell(I);
    for (int s = 0; s < I; ++s) u_cell[s] = std::max(0.0, state.at(s, worst));
    const auto f = source(network, u_cell);
    double fsum = 0.0;
    for (double v : f) fsum += v;
    const double c1 = condition.kind == MassKind::MassControl ? condition.c1 : 0.0;
    const double c2 = condition.kind == MassKind::MassControl ? condition.c2 : 0.0;
    row.mass_control_residual = fsum - (c1 * worst_sum + c2);

    double rmax = 0.0;
    for (int c = 0; c < cells; ++c) {
        for (int s = 0; s < I; ++s) u_cell[s] = std::max(0.0, state.at(s, c));
        for (int j = 0; j < network.reaction_count(); ++j)
            rmax = std::max(rmax, std::abs(reaction_rate(network, j, u_cell)));
    }
    row.max_reaction_rate = rmax;

    log.rows.push_back(std::move(row));
}

CheckReport verify_invariants(const DiagnosticsLog& log, const ReactionNetwork& network,
                              const MassCondition& condition, const Grid& grid,
                              const BoundaryFlux& flux, const VerifyOptions& options) {
    if (log.rows.empty()) throw std::invalid_argument("diagnostics log is empty");
    CheckReport report;

    // Positivity of every recorded species minimum.
    {
        double worst = std::numeric_limits<double>::infinity();
        for (const LogRow& row : log.rows)
            for (double v : row.min_value) worst = std::min(worst, v);
        report.checks.push_back({"positivity", worst >= 0.0, worst, 0.0, 0.0});
    }

    // Mass envelope: total mass under the integrated mass-control bound.
    {
        const double c1 = condition.kind == MassKind::MassControl ? condition.c1 : 0.0;
        const double c2 = condition.kind == MassKind::MassControl ? condition.c2 : 0.0;
        const double inflow = flux.total_inflow_rate(grid);
        const double m0 = log.rows.front().total_mass;
        const double t0 = log.rows.front().t;
        double worst_ratio = 0.0;
        for (const LogRow& row : log.rows) {
            const double bound =
                gronwall_mass_bound(c1, c2, m0, grid.domain_volume(), inflow, row.t - t0);
            if (bound > 0.0)
                worst_ratio = std::max(worst_ratio, row.total_mass / bound);
            else if (row.total_mass > 0.0)
                worst_ratio = std::numeric_limits<double>::infinity();
        }
        report.checks.push_back({"gronwall_envelope", worst_ratio <= 1.0 + options.gronwall_rel_tol,
                                 worst_ratio, 1.0, options.gronwall_rel_tol});
    }

    // Uniform-in-time plateau: the sup-norm over the second half of the run
    // must not exceed the first half's by more than the tolerance.
    {
        const double t_mid = 0.5 * (log.rows.front().t + log.rows.back().t);
        double first = 0.0, second = 0.0;
        for (const LogRow& row : log.rows) {
            for (double v : row.max_value) {
                if (row.t <= t_mid) first = std::max(first, v);
                if (row.t >= t_mid) second = std::max(second, v);
            }
        }
        const bool pass = second <= first * (1.0 + options.plateau_rel_tol);
        report.checks.push_back({"uniform_plateau", pass, second, first, options.plateau_rel_tol});
    }

    // Space-time Lp finiteness (the growth constant is the observed max).
    {
        double worst = 0.0;
        bool finite = true;
        for (const LogRow& row : log.rows)
            for (double v : row.lp) {
                if (!std::isfinite(v)) finite = false;
                worst = std::max(worst, v);
            }
        report.checks.push_back({"lp_growth", finite, worst, worst, 0.0});
    }

    // Equilibrium residual, only meaningful when the run settled and every
    // reaction is reversible.
    {
        bool reversible = network.reaction_count() > 0;
        for (const Reaction& r : network.reactions())
            if (!(r.kf > 0.0 && r.kb > 0.0)) reversible = false;
        if (reversible && options.run_reached_steady_state) {
            const double residual = log.rows.back().max_reaction_rate;
            const double bound = options.steady_tol * 10.0;
            report.checks.push_back({"equilibrium_residual", residual <= bound, residual, bound, 0.0});
        }
    }

    return report;
}

std::string timeseries_csv(const DiagnosticsLog& log) {
    std::ostringstream out;
    out << "t";
    for (const std::string& name : log.species_names)
        out << ",min_" << name << ",max_" << name << ",mass_" << name << ",lp_" << name;
    out << ",total_mass,mass_control_residual,dt\n";
    for (const LogRow& row : log.rows) {
        out << num17(row.t);
        for (size_t s = 0; s < log.species_names.size(); ++s)
            out << "," << num17(row.min_value[s]) << "," << num17(row.max_value[s]) << ","
                << num17(row.mass[s]) << "," << num17(row.lp[s]);
        out << "," << num17(row.total_mass) << "," << num17(row.mass_control_residual) << ","
            << num17(row.dt) << "\n";
    }
    return out.str();
}

std::string report_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : report.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"pass", c.pass},
                               {"value", c.value},
                               {"bound", c.bound},
                               {"tol", c.tol}});
    }
    char hash[20];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(report.config_hash));
    j["config_hash"] = hash;
    j["git_describe"] = RDX_GIT_DESCRIBE;
    return j.dump(2) + "\n";
}

void write_outputs(const DiagnosticsLog& log, const CheckReport& report,
                   const std::vector<StateField>& snapshots,
                   const std::vector<std::string>& species_names, const std::string& out_dir) {
    if (log.rows.empty()) throw std::invalid_argument("nothing recorded");
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    auto write_file = [&](const fs::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << content;
    };

    write_file(fs::path(out_dir) / "timeseries.csv", timeseries_csv(log));
    write_file(fs::path(out_dir) / "report.json", report_json(report));

    for (const StateField& snap : snapshots) {
        std::ostringstream out;
        out << "x";
        if (snap.grid.dim == 2) out << ",y";
        for (const std::string& name : species_names) out << "," << name;
        out << "\n";
        for (int j = 0; j < snap.grid.ny; ++j) {
            for (int i = 0; i < snap.grid.nx; ++i) {
                out << num17(snap.grid.x_center(i));
                if (snap.grid.dim == 2) out << "," << num17(snap.grid.y_center(j));
                for (int s = 0; s < snap.num_species; ++s)
                    out << "," << num17(snap.at(s, snap.grid.index(i, j)));
                out << "\n";
            }
        }
        char name[64];
        std::snprintf(name, sizeof name, "snapshot_%.6f.csv", snap.time);
        write_file(fs::path(out_dir) / name, out.str());
    }
}

}  // namespace rdx
