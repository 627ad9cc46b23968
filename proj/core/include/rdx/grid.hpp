#pragma once

#include <span>
#include <vector>

namespace rdx {

/// Cell-centered structured grid on a 1D interval or 2D rectangle.
/// Cell (i, j) has its center at ((i+1/2) dx, (j+1/2) dy). In 1D, ny = 1
/// and the y extent is a unit slab so volumes and face areas stay
/// consistent.
struct Grid {
    int dim = 1;
    int nx = 0, ny = 1;
    double lx = 0.0, ly = 1.0;
    double dx = 0.0, dy = 1.0;

    static Grid make_1d(int nx, double lx);
    static Grid make_2d(int nx, int ny, double lx, double ly);

    int cell_count() const { return nx * ny; }
    double cell_volume() const { return dx * dy; }
    double domain_volume() const { return lx * ly; }
    /// Measure of the boundary: 2 endpoints of unit area in 1D,
    /// perimeter in 2D.
    double boundary_measure() const { return dim == 1 ? 2.0 : 2.0 * (lx + ly); }
    int index(int i, int j) const { return j * nx + i; }
    double x_center(int i) const { return (i + 0.5) * dx; }
    double y_center(int j) const { return (j + 0.5) * dy; }
};

/// Concentrations of all species on a grid at one time instant, stored
/// species-major: values[s * cell_count + cell].
struct StateField {
    Grid grid;
    int num_species = 0;
    double time = 0.0;
    std::vector<double> values;

    StateField() = default;
    StateField(const Grid& g, int species)
        : grid(g), num_species(species),
          values(static_cast<size_t>(species) * g.cell_count(), 0.0) {}

    std::span<double> species(int s) {
        return {values.data() + static_cast<size_t>(s) * grid.cell_count(),
                static_cast<size_t>(grid.cell_count())};
    }
    std::span<const double> species(int s) const {
        return {values.data() + static_cast<size_t>(s) * grid.cell_count(),
                static_cast<size_t>(grid.cell_count())};
    }
    double& at(int s, int cell) { return values[static_cast<size_t>(s) * grid.cell_count() + cell]; }
    double at(int s, int cell) const {
        return values[static_cast<size_t>(s) * grid.cell_count() + cell];
    }
};

/// Per-species constant Neumann flux data b_i <= 0 on the whole boundary
/// (the normal component of the prescribed outward diffusive flux; a
/// negative value feeds mass in).
struct BoundaryFlux {
    std::vector<double> b;

    static BoundaryFlux zero(int num_species) { return BoundaryFlux{std::vector<double>(num_species, 0.0)}; }
    void validate() const;
    /// Total inflow magnitude sum_i |b_i| * |boundary|.
    double total_inflow_rate(const Grid& grid) const;
};

}  // namespace rdx
