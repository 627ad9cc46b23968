#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rdx/grid.hpp"

namespace rdx {

class ReactionNetwork;

enum class SplitScheme { Lie, Strang };

struct IntegratorConfig {
    double dt_init = 1e-3;
    double dt_min = 1e-12;
    double dt_max = 0.1;
    double safety = 1.0;  // in (0, 1], scales the halving on rejection
    SplitScheme scheme = SplitScheme::Lie;
    double t_end = 1.0;
    double steady_tol = 1e-10;

    void validate() const;
};

/// Per-species initial data: a constant, uniform noise from a seeded
/// generator, or a Gaussian bump over a constant base.
struct Initializer {
    enum class Kind { Constant, Random, Gaussian } kind = Kind::Constant;
    double value = 0.0;                  // Constant
    double min = 0.0, max = 0.0;         // Random
    std::uint64_t seed = 0;              // Random
    double x0 = 0.0, y0 = 0.0;           // Gaussian center
    double sigma = 1.0, amp = 0.0, base = 0.0;
};

struct OutputConfig {
    double interval = 0.1;
    double lp = 2.0;
    std::string dir;
};

struct SimConfig {
    Grid grid;
    IntegratorConfig time;
    std::vector<std::string> init_species;  // parallel to inits
    std::vector<Initializer> inits;
    std::vector<std::string> boundary_species;
    std::vector<double> boundary_values;
    OutputConfig output;

    /// Resolves the per-species boundary data against a network; species
    /// without an entry get zero flux.
    BoundaryFlux boundary_for(const ReactionNetwork& network) const;

    /// Builds the validated nonnegative initial state; species without an
    /// initializer start at zero.
    StateField initial_state(const ReactionNetwork& network) const;

    /// FNV-1a hash of the originating config text (0 if built in code).
    std::uint64_t config_hash = 0;
};

/// Parses the line-oriented `section.key = value` config format described
/// in the README. Unknown keys and malformed values are errors.
SimConfig parse_sim_config(std::string_view text);

std::uint64_t fnv1a_hash(std::string_view text);

}  // namespace rdx
