#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rdx {

/// A mobile species with its constant diffusion coefficient.
struct Species {
    std::string name;
    int index = 0;       // position in the network's species list
    double diffusion = 0.0;  // > 0
};

/// One reversible mass-action reaction. `mu` and `nu` are the forward and
/// backward stoichiometric coefficient vectors (length = species count).
/// An irreversible reaction has kb == 0.
struct Reaction {
    std::vector<int> mu;
    std::vector<int> nu;
    double kf = 0.0;
    double kb = 0.0;
};

enum class MassKind { Conserved, Dissipative, MassControl, Unknown };

/// Classification of the summed source term: Conserved means sum_i f_i = 0
/// identically; Dissipative means sum_i f_i <= 0 for all nonnegative u;
/// MassControl means sum_i f_i <= c1 * sum_i u_i + c2. The classifier is
/// sound but not complete; Unknown is returned when it cannot decide.
struct MassCondition {
    MassKind kind = MassKind::Unknown;
    double c1 = 0.0;  // meaningful iff kind == MassControl
    double c2 = 0.0;
};

std::string to_string(MassKind kind);

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// An immutable validated reaction network. Species are ordered by first
/// declaration; the stoichiometric matrix entry s(i,j) = nu_ij - mu_ij is
/// derived at construction and never stored inconsistently.
class ReactionNetwork {
  public:
    ReactionNetwork(std::vector<Species> species, std::vector<Reaction> reactions);

    const std::vector<Species>& species() const { return species_; }
    const std::vector<Reaction>& reactions() const { return reactions_; }
    int species_count() const { return static_cast<int>(species_.size()); }
    int reaction_count() const { return static_cast<int>(reactions_.size()); }

    /// Net stoichiometry of species i in reaction j.
    int stoich(int i, int j) const { return stoich_[static_cast<size_t>(i) * reactions_.size() + j]; }

    /// Index of a species by name, or -1.
    int find_species(std::string_view name) const;

    std::vector<double> diffusion_coefficients() const;
    double max_diffusion() const;

  private:
    std::vector<Species> species_;
    std::vector<Reaction> reactions_;
    std::vector<int> stoich_;  // row-major, I x J
};

/// Parse the line-oriented reaction DSL:
///   species NAME D=FLOAT
///   side (-> | <->) side : kf=FLOAT [, kb=FLOAT]
///   # comment
/// where side := [INT] NAME (+ [INT] NAME)*.
ReactionNetwork parse_network(std::string_view text);

/// Canonical text form; parse_network(render_network(n)) reproduces n.
std::string render_network(const ReactionNetwork& network);

/// Net rate R_j(u) = kf_j * prod u^mu_j - kb_j * prod u^nu_j, with the
/// convention that a zero exponent contributes factor 1.
double reaction_rate(const ReactionNetwork& network, int j, const std::vector<double>& u);

/// Source vector f_i(u) = sum_j s_ij R_j(u). Zero vector when there are no
/// reactions.
std::vector<double> source(const ReactionNetwork& network, const std::vector<double>& u);

/// Allocation-free source evaluation for inner loops. Caller guarantees
/// u >= 0 and matching lengths.
void source_into(const ReactionNetwork& network, std::span<const double> u, std::span<double> f);

/// Largest total stoichiometric degree over all reaction sides; 1 for a
/// reaction-free network so downstream exponent formulas stay defined.
int growth_exponent(const ReactionNetwork& network);

MassCondition classify_mass_condition(const ReactionNetwork& network);

}  // namespace rdx
