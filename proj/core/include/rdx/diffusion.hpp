#pragma once

#include <span>
#include <vector>

#include "rdx/grid.hpp"

namespace rdx {

/// Finite-volume divergence of the diffusive flux, div(D grad u), with the
/// prescribed flux b on every boundary face (-D du/dn = b, n outward).
/// The output satisfies the discrete divergence theorem exactly:
///   sum_cells out * cellvol = -b * |boundary|.
void laplacian_apply(std::span<const double> u, const Grid& grid, double diffusion,
                     double boundary_flux, std::span<double> out);

/// Homogeneous-Neumann 3/5-point Laplacian (no boundary source term).
void laplacian_homogeneous(std::span<const double> u, const Grid& grid, std::span<double> out);

/// One backward-Euler diffusion step per species:
///   (I - dt D L) u_new = u_old + dt * (boundary inflow source).
/// 1D solves the tridiagonal system directly; 2D splits into x then y
/// tridiagonal sweeps. Both factors are M-matrices, so nonnegative input
/// with b <= 0 yields nonnegative output, and discrete mass changes by
/// exactly -dt * sum_i b_i * |boundary|.
void diffusion_step_implicit(StateField& state, std::span<const double> diffusion,
                             const BoundaryFlux& flux, double dt);

/// Single-species convenience overload.
void diffusion_step_implicit(std::span<double> u, const Grid& grid, double diffusion,
                             double boundary_flux, double dt);

/// Scalar field sampled on a uniform time grid tau + k dt, k = 0..steps;
/// frames.size() == steps + 1.
struct ScalarTrajectory {
    Grid grid;
    double tau = 0.0;
    double dt = 0.0;
    std::vector<std::vector<double>> frames;

    double horizon_end() const { return tau + dt * (static_cast<double>(frames.size()) - 1.0); }
};

/// Discrete space-time Lp norm (sum_steps sum_cells |v|^p vol dt)^{1/p},
/// where each of the `frames.size() - 1` steps is represented by the frame
/// at its start. p = infinity gives the max of |v| over all frames.
double space_time_lp(const ScalarTrajectory& traj, double p);

/// Spatial Lp norm of one frame, (sum_cells |v|^p vol)^{1/p}; p = infinity
/// gives max |v|.
double spatial_lp(std::span<const double> u, const Grid& grid, double p);

/// Thomas algorithm for a tridiagonal system; diag/rhs are overwritten.
/// The backward-Euler operators built here are strictly diagonally
/// dominant, so no pivoting is needed.
void solve_tridiagonal(std::span<const double> lower, std::span<double> diag,
                       std::span<const double> upper, std::span<double> rhs);

}  // namespace rdx
