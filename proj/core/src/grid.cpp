#include "rdx/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace rdx {

Grid Grid::make_1d(int nx, double lx) {
    if (nx < 3) throw std::invalid_argument("grid needs at least 3 cells per direction");
    if (!(lx > 0.0)) throw std::invalid_argument("domain length must be positive");
    Grid g;
    g.dim = 1;
    g.nx = nx;
    g.ny = 1;
    g.lx = lx;
    g.ly = 1.0;
    g.dx = lx / nx;
    g.dy = 1.0;
    return g;
}

Grid Grid::make_2d(int nx, int ny, double lx, double ly) {
    if (nx < 3 || ny < 3) throw std::invalid_argument("grid needs at least 3 cells per direction");
    if (!(lx > 0.0) || !(ly > 0.0)) throw std::invalid_argument("domain lengths must be positive");
    Grid g;
    g.dim = 2;
    g.nx = nx;
    g.ny = ny;
    g.lx = lx;
    g.ly = ly;
    g.dx = lx / nx;
    g.dy = ly / ny;
    return g;
}

void BoundaryFlux::validate() const {
    for (double v : b) {
        if (!std::isfinite(v)) throw std::invalid_argument("boundary flux must be finite");
        if (v > 0.0) throw std::invalid_argument("boundary flux must be <= 0");
    }
}

double BoundaryFlux::total_inflow_rate(const Grid& grid) const {
    double total = 0.0;
    for (double v : b) total += std::abs(v);
    return total * grid.boundary_measure();
}

}  // namespace rdx
