#include "allspeed/grid.hpp"

#include <stdexcept>
#include <string>

namespace allspeed {

void GridSpec::validate() const {
  if (nx < 4 || ny < 4) {
    throw std::invalid_argument("grid needs at least 4 cells per direction, got " +
                                std::to_string(nx) + "x" + std::to_string(ny));
  }
  if (ghost < 2) throw std::invalid_argument("grid needs at least 2 ghost layers");
  if (!(x1 > x0) || !(y1 > y0)) throw std::invalid_argument("grid domain has non-positive extent");
}

ScalarField::ScalarField(const GridSpec& grid, double init)
    : nx_(grid.nx),
      ny_(grid.ny),
      ghost_(grid.ghost),
      stride_(static_cast<std::size_t>(grid.nx + 2 * grid.ghost)),
      data_(stride_ * static_cast<std::size_t>(grid.ny + 2 * grid.ghost), init) {}

namespace {

// Source index for ghost index k on an axis with n interior cells.
int source_index(int k, int n, Boundary bc) {
  if (bc == Boundary::periodic) return ((k % n) + n) % n;
  return k < 0 ? 0 : n - 1;
}

}  // namespace

void fill_ghosts(ScalarField& f, const GridSpec& grid) {
  const int nx = grid.nx, ny = grid.ny, g = grid.ghost;
  for (int j = 0; j < ny; ++j) {
    for (int k = 1; k <= g; ++k) {
      f(-k, j) = f(source_index(-k, nx, grid.bc_x), j);
      f(nx - 1 + k, j) = f(source_index(nx - 1 + k, nx, grid.bc_x), j);
    }
  }
  for (int k = 1; k <= g; ++k) {
    const int lo = source_index(-k, ny, grid.bc_y);
    const int hi = source_index(ny - 1 + k, ny, grid.bc_y);
    for (int i = -g; i < nx + g; ++i) {
      f(i, -k) = f(i, lo);
      f(i, ny - 1 + k) = f(i, hi);
    }
  }
}

void fill_ghosts(ConservedField& field, const GridSpec& grid) {
  for (auto& c : field.comp) fill_ghosts(c, grid);
}

}  // namespace allspeed
