#include "rdx/sim_config.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rdx/reaction_network.hpp"

namespace rdx {

void IntegratorConfig::validate() const {
    if (!(dt_min > 0.0 && dt_min <= dt_init && dt_init <= dt_max))
        throw std::invalid_argument("require 0 < dt_min <= dt_init <= dt_max");
    if (!(safety > 0.0 && safety <= 1.0)) throw std::invalid_argument("safety must lie in (0, 1]");
    if (!(steady_tol > 0.0)) throw std::invalid_argument("steady_tol must be positive");
    if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
}

std::uint64_t fnv1a_hash(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

// Uniform double in [lo, hi) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution so that seeded
// initial data is identical everywhere.
double uniform_double(std::mt19937_64& rng, double lo, double hi) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

[[noreturn]] void config_error(int line, const std::string& message) {
    throw std::invalid_argument("config line " + std::to_string(line) + ": " + message);
}

double to_double(const std::string& token, int line) {
    try {
        size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) config_error(line, "bad number '" + token + "'");
        return v;
    } catch (const std::invalid_argument&) {
        config_error(line, "bad number '" + token + "'");
    } catch (const std::out_of_range&) {
        config_error(line, "number out of range '" + token + "'");
    }
}

int to_int(const std::string& token, int line) {
    try {
        size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size()) config_error(line, "bad integer '" + token + "'");
        return v;
    } catch (const std::exception&) {
        config_error(line, "bad integer '" + token + "'");
    }
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string_view::npos) return {};
    return std::string(s.substr(a, b - a + 1));
}

Initializer parse_initializer(const std::string& value, int dim, int line) {
    auto tokens = split_tokens(value);
    if (tokens.empty()) config_error(line, "empty initializer");
    Initializer init;
    if (tokens[0] == "constant") {
        if (tokens.size() != 2) config_error(line, "constant takes one value");
        init.kind = Initializer::Kind::Constant;
        init.value = to_double(tokens[1], line);
        if (init.value < 0.0) config_error(line, "initial data must be nonnegative");
    } else if (tokens[0] == "random") {
        if (tokens.size() != 4) config_error(line, "random takes min max seed");
        init.kind = Initializer::Kind::Random;
        init.min = to_double(tokens[1], line);
        init.max = to_double(tokens[2], line);
        init.seed = static_cast<std::uint64_t>(std::stoull(tokens[3]));
        if (init.min < 0.0 || init.max < init.min)
            config_error(line, "random range must satisfy 0 <= min <= max");
    } else if (tokens[0] == "gaussian") {
        // gaussian x0 [y0] sigma amp base; the y0 form requires a 2D grid.
        if (tokens.size() == 5) {
            init.x0 = to_double(tokens[1], line);
            init.sigma = to_double(tokens[2], line);
            init.amp = to_double(tokens[3], line);
            init.base = to_double(tokens[4], line);
        } else if (tokens.size() == 6) {
            if (dim != 2) config_error(line, "gaussian with y0 needs a 2D grid");
            init.x0 = to_double(tokens[1], line);
            init.y0 = to_double(tokens[2], line);
            init.sigma = to_double(tokens[3], line);
            init.amp = to_double(tokens[4], line);
            init.base = to_double(tokens[5], line);
        } else {
            config_error(line, "gaussian takes x0 [y0] sigma amp base");
        }
        init.kind = Initializer::Kind::Gaussian;
        if (!(init.sigma > 0.0)) config_error(line, "gaussian sigma must be positive");
        if (init.amp < 0.0 || init.base < 0.0)
            config_error(line, "initial data must be nonnegative");
    } else {
        config_error(line, "unknown initializer '" + tokens[0] + "'");
    }
    return init;
}

}  // namespace

SimConfig parse_sim_config(std::string_view text) {
    SimConfig cfg;
    cfg.config_hash = fnv1a_hash(text);

    int dim = 1, nx = 0, ny = 0;
    double lx = 1.0, ly = 1.0;
    bool saw_nx = false, saw_ny = false;

    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        std::string_view raw = text.substr(
            start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++line_no;
        size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (!line.empty()) {
            size_t eq = line.find('=');
            if (eq == std::string::npos) config_error(line_no, "expected key = value");
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (key.empty() || value.empty()) config_error(line_no, "expected key = value");

            if (key == "grid.dim") dim = to_int(value, line_no);
            else if (key == "grid.nx") { nx = to_int(value, line_no); saw_nx = true; }
            else if (key == "grid.ny") { ny = to_int(value, line_no); saw_ny = true; }
            else if (key == "grid.lx") lx = to_double(value, line_no);
            else if (key == "grid.ly") ly = to_double(value, line_no);
            else if (key == "time.t_end") cfg.time.t_end = to_double(value, line_no);
            else if (key == "time.dt_init") cfg.time.dt_init = to_double(value, line_no);
            else if (key == "time.dt_min") cfg.time.dt_min = to_double(value, line_no);
            else if (key == "time.dt_max") cfg.time.dt_max = to_double(value, line_no);
            else if (key == "time.safety") cfg.time.safety = to_double(value, line_no);
            else if (key == "time.steady_tol") cfg.time.steady_tol = to_double(value, line_no);
            else if (key == "time.scheme") {
                if (value == "lie") cfg.time.scheme = SplitScheme::Lie;
                else if (value == "strang") cfg.time.scheme = SplitScheme::Strang;
                else config_error(line_no, "scheme must be lie or strang");
            } else if (key.starts_with("init.")) {
                cfg.init_species.push_back(key.substr(5));
                cfg.inits.push_back(parse_initializer(value, dim, line_no));
            } else if (key.starts_with("boundary.")) {
                const double b = to_double(value, line_no);
                if (b > 0.0) config_error(line_no, "boundary flux must be <= 0");
                cfg.boundary_species.push_back(key.substr(9));
                cfg.boundary_values.push_back(b);
            } else if (key == "output.interval") cfg.output.interval = to_double(value, line_no);
            else if (key == "output.lp") cfg.output.lp = to_double(value, line_no);
            else if (key == "output.dir") cfg.output.dir = value;
            else config_error(line_no, "unknown key '" + key + "'");
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }

    if (!saw_nx) throw std::invalid_argument("config: grid.nx is required");
    if (dim == 1) {
        cfg.grid = Grid::make_1d(nx, lx);
    } else if (dim == 2) {
        if (!saw_ny) throw std::invalid_argument("config: grid.ny is required in 2D");
        cfg.grid = Grid::make_2d(nx, ny, lx, ly);
    } else {
        throw std::invalid_argument("config: grid.dim must be 1 or 2");
    }
    cfg.time.validate();
    if (!(cfg.output.interval > 0.0))
        throw std::invalid_argument("config: output.interval must be positive");
    if (cfg.output.lp != std::numeric_limits<double>::infinity() && cfg.output.lp < 1.0)
        throw std::invalid_argument("config: output.lp must be >= 1");
    return cfg;
}

BoundaryFlux SimConfig::boundary_for(const ReactionNetwork& network) const {
    BoundaryFlux flux = BoundaryFlux::zero(network.species_count());
    for (size_t k = 0; k < boundary_species.size(); ++k) {
        const int s = network.find_species(boundary_species[k]);
        if (s < 0)
            throw std::invalid_argument("config references unknown species " + boundary_species[k]);
        flux.b[static_cast<size_t>(s)] = boundary_values[k];
    }
    flux.validate();
    return flux;
}

StateField SimConfig::initial_state(const ReactionNetwork& network) const {
    StateField state(grid, network.species_count());
    for (size_t k = 0; k < inits.size(); ++k) {
        const int s = network.find_species(init_species[k]);
        if (s < 0)
            throw std::invalid_argument("config references unknown species " + init_species[k]);
        auto u = state.species(s);
        const Initializer& init = inits[k];
        switch (init.kind) {
            case Initializer::Kind::Constant:
                for (double& v : u) v = init.value;
                break;
            case Initializer::Kind::Random: {
                std::mt19937_64 rng(init.seed);
                for (double& v : u) v = uniform_double(rng, init.min, init.max);
                break;
            }
            case Initializer::Kind::Gaussian:
                for (int j = 0; j < grid.ny; ++j) {
                    for (int i = 0; i < grid.nx; ++i) {
                        double r2 = (grid.x_center(i) - init.x0) * (grid.x_center(i) - init.x0);
                        if (grid.dim == 2)
                            r2 += (grid.y_center(j) - init.y0) * (grid.y_center(j) - init.y0);
                        u[grid.index(i, j)] =
                            init.base + init.amp * std::exp(-r2 / (2.0 * init.sigma * init.sigma));
                    }
                }
                break;
        }
    }
    for (double v : state.values) {
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("initial data must be finite and nonnegative");
    }
    return state;
}

}  // namespace rdx
