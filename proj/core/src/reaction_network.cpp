#include "rdx/reaction_network.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

namespace rdx {

std::string to_string(MassKind kind) {
    switch (kind) {
        case MassKind::Conserved: return "Conserved";
        case MassKind::Dissipative: return "Dissipative";
        case MassKind::MassControl: return "MassControl";
        case MassKind::Unknown: return "Unknown";
    }
    return "Unknown";
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

ReactionNetwork::ReactionNetwork(std::vector<Species> species, std::vector<Reaction> reactions)
    : species_(std::move(species)), reactions_(std::move(reactions)) {
    const size_t I = species_.size();
    const size_t J = reactions_.size();
    if (I < 1) throw std::invalid_argument("network needs at least one species");
    for (size_t i = 0; i < I; ++i) {
        if (!(species_[i].diffusion > 0.0))
            throw std::invalid_argument("species " + species_[i].name +
                                        ": diffusion coefficient must be positive");
        species_[i].index = static_cast<int>(i);
        for (size_t k = i + 1; k < I; ++k)
            if (species_[i].name == species_[k].name)
                throw std::invalid_argument("duplicate species " + species_[i].name);
    }
    for (const Reaction& r : reactions_) {
        if (r.mu.size() != I || r.nu.size() != I)
            throw std::invalid_argument("stoichiometry vector length does not match species count");
        if (r.mu == r.nu) throw std::invalid_argument("reaction with mu == nu is a no-op");
        for (int m : r.mu)
            if (m < 0) throw std::invalid_argument("negative stoichiometric coefficient");
        for (int n : r.nu)
            if (n < 0) throw std::invalid_argument("negative stoichiometric coefficient");
        if (r.kf < 0.0 || r.kb < 0.0) throw std::invalid_argument("negative rate constant");
        if (!(r.kf + r.kb > 0.0)) throw std::invalid_argument("reaction with kf = kb = 0");
    }
    stoich_.assign(I * J, 0);
    for (size_t j = 0; j < J; ++j)
        for (size_t i = 0; i < I; ++i)
            stoich_[i * J + j] = reactions_[j].nu[i] - reactions_[j].mu[i];
}

int ReactionNetwork::find_species(std::string_view name) const {
    for (const Species& s : species_)
        if (s.name == name) return s.index;
    return -1;
}

std::vector<double> ReactionNetwork::diffusion_coefficients() const {
    std::vector<double> d(species_.size());
    for (size_t i = 0; i < species_.size(); ++i) d[i] = species_[i].diffusion;
    return d;
}

double ReactionNetwork::max_diffusion() const {
    double m = 0.0;
    for (const Species& s : species_) m = std::max(m, s.diffusion);
    return m;
}

namespace {

// Line-oriented recursive-descent parser. Columns are 1-based byte offsets.
class LineParser {
  public:
    LineParser(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

    void skip_ws() {
        while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= line_.size();
    }

    bool try_literal(std::string_view lit) {
        skip_ws();
        if (line_.substr(pos_).starts_with(lit)) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }

    void expect_literal(std::string_view lit, const std::string& what) {
        if (!try_literal(lit)) fail("expected " + what);
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]));
    }

    std::string name() {
        skip_ws();
        size_t start = pos_;
        if (pos_ >= line_.size() || !std::isalpha(static_cast<unsigned char>(line_[pos_])))
            fail("expected species name");
        ++pos_;
        while (pos_ < line_.size() &&
               (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_'))
            ++pos_;
        return std::string(line_.substr(start, pos_ - start));
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stoi(std::string(line_.substr(start, pos_ - start)));
    }

    double number() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < line_.size() && (line_[pos_] == '+' || line_[pos_] == '-')) ++pos_;
        size_t digits = 0;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
            ++pos_;
            ++digits;
        }
        if (pos_ < line_.size() && line_[pos_] == '.') {
            ++pos_;
            while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
                ++pos_;
                ++digits;
            }
        }
        if (digits == 0) fail("expected number");
        if (pos_ < line_.size() && (line_[pos_] == 'e' || line_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < line_.size() && (line_[pos_] == '+' || line_[pos_] == '-')) ++pos_;
            size_t exp_digits = 0;
            while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
                ++pos_;
                ++exp_digits;
            }
            if (exp_digits == 0) fail("expected exponent digits");
        }
        return std::stod(std::string(line_.substr(start, pos_ - start)));
    }

    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(line_no_, static_cast<int>(pos_) + 1, message);
    }

    size_t pos() const { return pos_; }

  private:
    std::string_view line_;
    int line_no_;
    size_t pos_ = 0;
};

struct SideTerm {
    int coeff;
    std::string name;
    size_t column;  // of the name, for error reporting
};

std::vector<SideTerm> parse_side(LineParser& p) {
    std::vector<SideTerm> terms;
    for (;;) {
        SideTerm t;
        t.coeff = p.peek_digit() ? p.integer() : 1;
        p.skip_ws();
        t.column = p.pos() + 1;
        t.name = p.name();
        terms.push_back(std::move(t));
        if (!p.try_literal("+")) break;
    }
    return terms;
}

}  // namespace

ReactionNetwork parse_network(std::string_view text) {
    std::vector<Species> species;
    std::vector<Reaction> reactions;
    std::unordered_map<std::string, int> index_of;

    int line_no = 0;
    size_t line_start = 0;
    while (line_start <= text.size()) {
        size_t nl = text.find('\n', line_start);
        std::string_view line = text.substr(
            line_start, nl == std::string_view::npos ? std::string_view::npos : nl - line_start);
        ++line_no;

        size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);

        LineParser p(line, line_no);
        if (!p.at_end()) {
            if (p.try_literal("species")) {
                size_t name_col = p.pos() + 1;
                std::string name = p.name();
                p.expect_literal("D", "D=<diffusion>");
                p.expect_literal("=", "'=' after D");
                double d = p.number();
                if (!p.at_end()) p.fail("trailing characters after species declaration");
                if (index_of.contains(name))
                    throw ParseError(line_no, static_cast<int>(name_col),
                                     "duplicate species declaration: " + name);
                if (!(d > 0.0))
                    throw ParseError(line_no, static_cast<int>(name_col),
                                     "species " + name + ": D must be positive");
                index_of[name] = static_cast<int>(species.size());
                species.push_back({name, static_cast<int>(species.size()), d});
            } else {
                // reaction line
                auto lhs = parse_side(p);
                bool reversible;
                if (p.try_literal("<->")) reversible = true;
                else if (p.try_literal("->")) reversible = false;
                else p.fail("expected '->' or '<->'");
                auto rhs = parse_side(p);
                p.expect_literal(":", "':' before rate constants");
                p.expect_literal("kf", "kf=<rate>");
                p.expect_literal("=", "'=' after kf");
                size_t kf_col = p.pos() + 1;
                double kf = p.number();
                double kb = 0.0;
                size_t kb_col = kf_col;
                if (p.try_literal(",")) {
                    p.expect_literal("kb", "kb=<rate>");
                    p.expect_literal("=", "'=' after kb");
                    kb_col = p.pos() + 1;
                    kb = p.number();
                }
                if (!p.at_end()) p.fail("trailing characters after reaction");
                if (kf < 0.0)
                    throw ParseError(line_no, static_cast<int>(kf_col), "negative rate constant");
                if (kb < 0.0)
                    throw ParseError(line_no, static_cast<int>(kb_col), "negative rate constant");

                Reaction r;
                r.mu.assign(species.size(), 0);
                r.nu.assign(species.size(), 0);
                r.kf = kf;
                r.kb = reversible ? kb : 0.0;
                auto accumulate = [&](const std::vector<SideTerm>& side, std::vector<int>& out) {
                    for (const SideTerm& t : side) {
                        auto it = index_of.find(t.name);
                        if (it == index_of.end())
                            throw ParseError(line_no, static_cast<int>(t.column),
                                             "unknown species " + t.name);
                        out[static_cast<size_t>(it->second)] += t.coeff;
                    }
                };
                accumulate(lhs, r.mu);
                accumulate(rhs, r.nu);
                if (r.mu == r.nu)
                    throw ParseError(line_no, 1, "reaction with identical sides is a no-op");
                if (!(r.kf + r.kb > 0.0))
                    throw ParseError(line_no, static_cast<int>(kf_col),
                                     "reaction with kf = kb = 0");
                reactions.push_back(std::move(r));
            }
        }

        if (nl == std::string_view::npos) break;
        line_start = nl + 1;
    }

    if (species.empty()) throw ParseError(line_no, 1, "no species declared");
    return ReactionNetwork(std::move(species), std::move(reactions));
}

namespace {

std::string format_rate(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void render_side(std::ostringstream& out, const ReactionNetwork& net, const std::vector<int>& coeffs) {
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) out << " + ";
        if (coeffs[i] != 1) out << coeffs[i] << " ";
        out << net.species()[i].name;
        first = false;
    }
    // An all-zero side renders as "0 X" (coefficient-zero term on the first
    // species), which parses back to the same zero vector.
    if (first) out << "0 " << net.species()[0].name;
}

}  // namespace

std::string render_network(const ReactionNetwork& network) {
    std::ostringstream out;
    for (const Species& s : network.species())
        out << "species " << s.name << " D=" << format_rate(s.diffusion) << "\n";
    for (const Reaction& r : network.reactions()) {
        render_side(out, network, r.mu);
        out << (r.kb > 0.0 ? " <-> " : " -> ");
        render_side(out, network, r.nu);
        out << " : kf=" << format_rate(r.kf);
        if (r.kb > 0.0) out << ", kb=" << format_rate(r.kb);
        out << "\n";
    }
    return out.str();
}

namespace {

double monomial(const std::vector<double>& u, const std::vector<int>& exponents) {
    double prod = 1.0;
    for (size_t m = 0; m < u.size(); ++m) {
        for (int e = 0; e < exponents[m]; ++e) prod *= u[m];
    }
    return prod;
}

void check_state(const ReactionNetwork& network, const std::vector<double>& u) {
    if (u.size() != static_cast<size_t>(network.species_count()))
        throw std::invalid_argument("concentration vector length does not match species count");
    for (double v : u)
        if (v < 0.0)
            throw std::invalid_argument("negative concentration passed to rate evaluation");
}

}  // namespace

double reaction_rate(const ReactionNetwork& network, int j, const std::vector<double>& u) {
    if (j < 0 || j >= network.reaction_count())
        throw std::out_of_range("reaction index out of range");
    check_state(network, u);
    const Reaction& r = network.reactions()[static_cast<size_t>(j)];
    return r.kf * monomial(u, r.mu) - r.kb * monomial(u, r.nu);
}

std::vector<double> source(const ReactionNetwork& network, const std::vector<double>& u) {
    check_state(network, u);
    const int I = network.species_count();
    const int J = network.reaction_count();
    std::vector<double> f(static_cast<size_t>(I), 0.0);
    for (int j = 0; j < J; ++j) {
        const double rate = reaction_rate(network, j, u);
        for (int i = 0; i < I; ++i) f[static_cast<size_t>(i)] += network.stoich(i, j) * rate;
    }
    return f;
}

int growth_exponent(const ReactionNetwork& network) {
    if (network.reaction_count() == 0) return 1;
    int lambda = 0;
    for (const Reaction& r : network.reactions()) {
        int fwd = 0, bwd = 0;
        for (int m : r.mu) fwd += m;
        for (int n : r.nu) bwd += n;
        lambda = std::max({lambda, fwd, bwd});
    }
    return lambda;
}

MassCondition classify_mass_condition(const ReactionNetwork& network) {
    const int I = network.species_count();
    const int J = network.reaction_count();

    bool conserved = true;
    std::vector<int> sigma(static_cast<size_t>(J), 0);
    for (int j = 0; j < J; ++j) {
        int s = 0;
        for (int i = 0; i < I; ++i) s += network.stoich(i, j);
        sigma[static_cast<size_t>(j)] = s;
        if (s != 0) conserved = false;
    }
    if (conserved) return {MassKind::Conserved, 0.0, 0.0};

    // sum_i f_i(u) = sum_j sigma_j (kf_j u^mu_j - kb_j u^nu_j). A monomial
    // pushes the sum up iff its signed coefficient is positive: the forward
    // term when sigma_j > 0, the backward term when sigma_j < 0. The bound
    // sum_i f_i <= C1 sum u + C2 follows whenever every such monomial has
    // total degree <= 1 (u^e <= sum u for a degree-1 monomial, u >= 0).
    bool any_positive = false;
    bool all_low_degree = true;
    double c1 = 0.0, c2 = 0.0;
    for (int j = 0; j < J; ++j) {
        const Reaction& r = network.reactions()[static_cast<size_t>(j)];
        const int s = sigma[static_cast<size_t>(j)];
        auto consider = [&](double k, const std::vector<int>& exps) {
            if (k <= 0.0) return;
            any_positive = true;
            int degree = 0;
            for (int e : exps) degree += e;
            if (degree > 1) {
                all_low_degree = false;
            } else if (degree == 1) {
                c1 += std::abs(static_cast<double>(s)) * k;
            } else {
                c2 += std::abs(static_cast<double>(s)) * k;
            }
        };
        if (s > 0) consider(r.kf, r.mu);
        if (s < 0) consider(r.kb, r.nu);
    }

    if (!any_positive) return {MassKind::Dissipative, 0.0, 0.0};
    if (all_low_degree) return {MassKind::MassControl, c1, c2};
    return {MassKind::Unknown, 0.0, 0.0};
}

}  // namespace rdx
