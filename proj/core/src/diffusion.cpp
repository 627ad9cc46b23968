#include "rdx/diffusion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rdx/parallel.hpp"

namespace rdx {

void solve_tridiagonal(std::span<const double> lower, std::span<double> diag,
                       std::span<const double> upper, std::span<double> rhs) {
    const size_t n = diag.size();
    if (n == 0) return;
    // Forward elimination; diag is reused for the modified coefficients.
    for (size_t i = 1; i < n; ++i) {
        const double m = lower[i] / diag[i - 1];
        diag[i] -= m * upper[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for (size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
}

void laplacian_homogeneous(std::span<const double> u, const Grid& grid, std::span<double> out) {
    const int nx = grid.nx, ny = grid.ny;
    const double ix2 = 1.0 / (grid.dx * grid.dx);
    const double iy2 = 1.0 / (grid.dy * grid.dy);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int c = grid.index(i, j);
            double acc = 0.0;
            if (i > 0) acc += (u[grid.index(i - 1, j)] - u[c]) * ix2;
            if (i < nx - 1) acc += (u[grid.index(i + 1, j)] - u[c]) * ix2;
            if (grid.dim == 2) {
                if (j > 0) acc += (u[grid.index(i, j - 1)] - u[c]) * iy2;
                if (j < ny - 1) acc += (u[grid.index(i, j + 1)] - u[c]) * iy2;
            }
            out[c] = acc;
        }
    }
}

namespace {

// Adds the prescribed-flux boundary source -b * facearea / cellvol to
// every cell touching the boundary, scaled by `factor`.
void add_boundary_source(const Grid& grid, double boundary_flux, double factor,
                         std::span<double> out) {
    if (boundary_flux == 0.0) return;
    const double sx = -boundary_flux / grid.dx * factor;  // x-faces: area dy, volume dx dy
    for (int j = 0; j < grid.ny; ++j) {
        out[grid.index(0, j)] += sx;
        out[grid.index(grid.nx - 1, j)] += sx;
    }
    if (grid.dim == 2) {
        const double sy = -boundary_flux / grid.dy * factor;
        for (int i = 0; i < grid.nx; ++i) {
            out[grid.index(i, 0)] += sy;
            out[grid.index(i, grid.ny - 1)] += sy;
        }
    }
}

}  // namespace

void laplacian_apply(std::span<const double> u, const Grid& grid, double diffusion,
                     double boundary_flux, std::span<double> out) {
    if (!(diffusion > 0.0)) throw std::invalid_argument("diffusion coefficient must be positive");
    laplacian_homogeneous(u, grid, out);
    for (double& v : out) v *= diffusion;
    add_boundary_source(grid, boundary_flux, 1.0, out);
}

namespace {

// Solves (I - a Lx) along every x-line of the grid. `a` multiplies the
// second-difference operator with homogeneous Neumann closure.
void sweep_x(std::span<double> u, const Grid& grid, double a) {
    const int nx = grid.nx, ny = grid.ny;
    const double r = a / (grid.dx * grid.dx);
    std::vector<double> lower(nx, -r), upper(nx, -r), diag(nx), rhs(nx);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            diag[i] = 1.0 + 2.0 * r;
            rhs[i] = u[grid.index(i, j)];
        }
        diag[0] = 1.0 + r;
        diag[nx - 1] = 1.0 + r;
        solve_tridiagonal(lower, diag, upper, rhs);
        for (int i = 0; i < nx; ++i) u[grid.index(i, j)] = rhs[i];
    }
}

void sweep_y(std::span<double> u, const Grid& grid, double a) {
    const int nx = grid.nx, ny = grid.ny;
    const double r = a / (grid.dy * grid.dy);
    std::vector<double> lower(ny, -r), upper(ny, -r), diag(ny), rhs(ny);
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            diag[j] = 1.0 + 2.0 * r;
            rhs[j] = u[grid.index(i, j)];
        }
        diag[0] = 1.0 + r;
        diag[ny - 1] = 1.0 + r;
        solve_tridiagonal(lower, diag, upper, rhs);
        for (int j = 0; j < ny; ++j) u[grid.index(i, j)] = rhs[j];
    }
}

}  // namespace

void diffusion_step_implicit(std::span<double> u, const Grid& grid, double diffusion,
                             double boundary_flux, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(diffusion > 0.0)) throw std::invalid_argument("diffusion coefficient must be positive");
    add_boundary_source(grid, boundary_flux, dt, u);
    const double a = dt * diffusion;
    sweep_x(u, grid, a);
    if (grid.dim == 2) sweep_y(u, grid, a);
}

void diffusion_step_implicit(StateField& state, std::span<const double> diffusion,
                             const BoundaryFlux& flux, double dt) {
    if (diffusion.size() != static_cast<size_t>(state.num_species) ||
        flux.b.size() != static_cast<size_t>(state.num_species))
        throw std::invalid_argument("per-species data does not match species count");
    parallel_for(state.num_species, [&](int s) {
        diffusion_step_implicit(state.species(s), state.grid, diffusion[s], flux.b[s], dt);
    });
}

double spatial_lp(std::span<const double> u, const Grid& grid, double p) {
    if (p == std::numeric_limits<double>::infinity()) {
        double m = 0.0;
        for (double v : u) m = std::max(m, std::abs(v));
        return m;
    }
    if (p < 1.0) throw std::invalid_argument("p must be >= 1");
    const double vol = grid.cell_volume();
    double acc = 0.0;
    for (double v : u) acc += std::pow(std::abs(v), p) * vol;
    return std::pow(acc, 1.0 / p);
}

double space_time_lp(const ScalarTrajectory& traj, double p) {
    if (traj.frames.empty()) throw std::invalid_argument("empty trajectory");
    if (p == std::numeric_limits<double>::infinity()) {
        double m = 0.0;
        for (const auto& frame : traj.frames)
            for (double v : frame) m = std::max(m, std::abs(v));
        return m;
    }
    if (p < 1.0) throw std::invalid_argument("p must be >= 1");
    const double vol = traj.grid.cell_volume();
    double acc = 0.0;
    // One summand per step; the step from t_k to t_{k+1} is represented by
    // the frame at t_k (the implicit frame of the reversed-time solve).
    for (size_t k = 0; k + 1 < traj.frames.size(); ++k)
        for (double v : traj.frames[k]) acc += std::pow(std::abs(v), p) * vol * traj.dt;
    return std::pow(acc, 1.0 / p);
}

}  // namespace rdx
