#pragma once

#include <optional>
#include <vector>

namespace rdx {

class ReactionNetwork;

/// Iterates of the integrability-gain recursion
///   p_{k+1} = (n+2)(p_k/lambda) / (n+2 - 2 p_k/lambda),
/// run until p_k/lambda exceeds (n+2)/2 (diverged = true, k0 = escape
/// index), the sequence stops increasing, or max_iter is hit.
struct BootstrapReport {
    double p0 = 0.0;
    int n = 0;
    int lambda = 1;
    std::vector<double> sequence;
    int k0 = -1;  // valid iff diverged
    bool diverged = false;
};

/// Admissible sub-interval of [3/2, 2] for the dual exponent p'. May be
/// empty; `contains` respects the open/closed endpoints.
struct DualExponentWindow {
    double d_max = 0.0;
    double c_three_halves = 0.0;
    bool empty = true;
    double lo = 0.0, hi = 0.0;
    bool lo_open = false, hi_open = false;

    bool contains(double p_prime) const {
        if (empty) return false;
        if (p_prime < lo || p_prime > hi) return false;
        if (lo_open && p_prime == lo) return false;
        if (hi_open && p_prime == hi) return false;
        return true;
    }
};

struct PreconditionReport {
    int lambda = 1;
    double threshold = 0.0;  // (lambda-1)(n+2)/2
    double p = 0.0;
    bool p_admissible = false;
    double p_prime = 0.0;  // Holder conjugate p/(p-1)
    std::optional<double> empirical_cmr;
    std::optional<bool> cmr_below_one;
};

/// (lambda-1)(n+2)/2: p must exceed this for the space-time Lp estimate.
double admissible_p_threshold(int n, int lambda);

BootstrapReport bootstrap_sequence(double p0, int n, int lambda, int max_iter);

/// Interpolation bound (mr)^{-(4/r)(r-3/2)} * c32^{(3/r)(2-r)} for
/// r in [3/2, 2]. Equals c32 at r = 3/2 and 1/mr at r = 2.
double cmr_interpolation_bound(double r, double mr, double c_three_halves);

/// Window of p' in [3/2, 2] for which the interpolation bound at
/// D = d_max/2 falls below 1, by the branch conditions on
/// q = D * c_three_halves (q > 1, q < 1, and the q = 1 boundary by direct
/// sign evaluation). Never fabricates a window: may be empty.
DualExponentWindow select_dual_exponent(double d_max, double c_three_halves);

/// Integrated mass envelope e^{c1 t} m0 + ((c2 |Omega| + B)/c1)(e^{c1 t} - 1),
/// with the c1 -> 0 limit m0 + (c2 |Omega| + B) t.
double gronwall_mass_bound(double c1, double c2, double m0, double domain_volume,
                           double boundary_inflow_rate, double t);

PreconditionReport check_preconditions(const ReactionNetwork& network, int n, double p,
                                       std::optional<double> empirical_cmr = std::nullopt);

}  // namespace rdx
