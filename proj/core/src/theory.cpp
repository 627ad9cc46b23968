#include "rdx/theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rdx/reaction_network.hpp"

namespace rdx {

double admissible_p_threshold(int n, int lambda) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (lambda < 1) throw std::invalid_argument("growth exponent must be >= 1");
    return 0.5 * (lambda - 1) * (n + 2);
}

BootstrapReport bootstrap_sequence(double p0, int n, int lambda, int max_iter) {
    if (!(p0 > 1.0)) throw std::invalid_argument("p0 must exceed 1");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    admissible_p_threshold(n, lambda);  // validates n, lambda

    BootstrapReport report;
    report.p0 = p0;
    report.n = n;
    report.lambda = lambda;
    report.sequence.push_back(p0);

    const double escape = 0.5 * (n + 2);
    for (int k = 0; k < max_iter; ++k) {
        const double pk = report.sequence.back();
        const double rho = pk / lambda;
        if (rho > escape) {
            report.diverged = true;
            report.k0 = k;
            return report;
        }
        const double denom = (n + 2) - 2.0 * rho;
        if (denom <= 0.0) {
            // rho sits exactly on (n+2)/2: the next exponent is unbounded.
            report.sequence.push_back(std::numeric_limits<double>::infinity());
            report.diverged = true;
            report.k0 = k + 1;
            return report;
        }
        const double next = (n + 2) * rho / denom;
        report.sequence.push_back(next);
        if (next <= pk) return report;  // stagnation below the threshold
    }
    // max_iter exhausted; check whether the last iterate already escaped.
    if (report.sequence.back() / lambda > escape) {
        report.diverged = true;
        report.k0 = static_cast<int>(report.sequence.size()) - 1;
    }
    return report;
}

double cmr_interpolation_bound(double r, double mr, double c_three_halves) {
    if (r < 1.5 || r > 2.0) throw std::invalid_argument("r must lie in [3/2, 2]");
    if (!(mr > 0.0)) throw std::invalid_argument("mr must be positive");
    if (!(c_three_halves > 0.0)) throw std::invalid_argument("C(3/2) must be positive");
    const double e1 = -(4.0 / r) * (r - 1.5);
    const double e2 = (3.0 / r) * (2.0 - r);
    return std::pow(mr, e1) * std::pow(c_three_halves, e2);
}

DualExponentWindow select_dual_exponent(double d_max, double c_three_halves) {
    if (!(d_max > 0.0)) throw std::invalid_argument("d_max must be positive");
    if (!(c_three_halves > 0.0)) throw std::invalid_argument("C(3/2) must be positive");

    DualExponentWindow w;
    w.d_max = d_max;
    w.c_three_halves = c_three_halves;

    const double D = 0.5 * d_max;
    const double q = D * c_three_halves;
    const double ln_d = std::log(D);

    if (q > 1.0) {
        // 2 - p' < (1/2) ln(D)/ln(q), i.e. p' > 2 - (1/2) ln(D)/ln(q).
        const double lo = 2.0 - 0.5 * ln_d / std::log(q);
        if (lo >= 2.0) return w;  // nothing in [3/2, 2] satisfies the strict bound
        w.empty = false;
        w.lo = std::max(1.5, lo);
        w.lo_open = lo >= 1.5;  // the branch inequality is strict at its own boundary
        w.hi = 2.0;
        w.hi_open = false;
        return w;
    }
    if (q < 1.0) {
        // 2 - p' > (2/3) ln(D)/ln(q), i.e. p' < 2 - (2/3) ln(D)/ln(q).
        const double hi = 2.0 - (2.0 / 3.0) * ln_d / std::log(q);
        if (hi <= 1.5) return w;
        w.empty = false;
        w.lo = 1.5;
        w.lo_open = false;
        if (hi >= 2.0) {
            // p' = 2 satisfies 0 > (2/3) ln(D)/ln(q) whenever that side is
            // negative, which is exactly the hi > 2 case.
            w.hi = 2.0;
            w.hi_open = hi == 2.0;
        } else {
            w.hi = hi;
            w.hi_open = true;
        }
        return w;
    }
    // q == 1: both branches divide by ln(q) = 0. Evaluate the underlying
    // inequality (3/p')(2-p') ln(q) < ln(D) directly: the left side is 0
    // for every p', so the window is all of [3/2, 2] iff ln(D) > 0.
    if (ln_d > 0.0) {
        w.empty = false;
        w.lo = 1.5;
        w.hi = 2.0;
        w.lo_open = w.hi_open = false;
    }
    return w;
}

double gronwall_mass_bound(double c1, double c2, double m0, double domain_volume,
                           double boundary_inflow_rate, double t) {
    if (c1 < 0.0) throw std::invalid_argument("c1 must be nonnegative");
    if (m0 < 0.0) throw std::invalid_argument("initial mass must be nonnegative");
    if (t < 0.0) throw std::invalid_argument("time must be nonnegative");
    const double beta = c2 * domain_volume + boundary_inflow_rate;
    if (c1 == 0.0) return m0 + beta * t;
    const double growth = std::expm1(c1 * t);  // e^{c1 t} - 1
    return (1.0 + growth) * m0 + beta / c1 * growth;
}

PreconditionReport check_preconditions(const ReactionNetwork& network, int n, double p,
                                       std::optional<double> empirical_cmr) {
    if (!(p > 1.0)) throw std::invalid_argument("p must exceed 1 (conjugate undefined)");
    PreconditionReport report;
    report.lambda = growth_exponent(network);
    report.threshold = admissible_p_threshold(n, report.lambda);
    report.p = p;
    report.p_admissible = p > report.threshold;
    report.p_prime = p / (p - 1.0);
    if (empirical_cmr) {
        report.empirical_cmr = empirical_cmr;
        report.cmr_below_one = *empirical_cmr < 1.0;
    }
    return report;
}

}  // namespace rdx
