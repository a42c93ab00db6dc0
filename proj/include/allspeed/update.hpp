// Conservative finite-volume update shared by the schemes.
#pragma once

#include "allspeed/grid.hpp"

namespace allspeed {

/// Per-component flux arrays on x-edges and y-edges (edge conventions of multid.hpp).
struct EdgeFluxes {
  explicit EdgeFluxes(const GridSpec& grid)
      : fx{ScalarField(grid), ScalarField(grid), ScalarField(grid), ScalarField(grid)},
        fy{ScalarField(grid), ScalarField(grid), ScalarField(grid), ScalarField(grid)} {}
  std::array<ScalarField, 4> fx;
  std::array<ScalarField, 4> fy;
};

/// U^{n+1} = U^n - dt/dx [f^x]_{i+-1/2,j} - dt/dy [f^y]_{i,j+-1/2} for the
/// components in [first, last], interior cells only.
inline void apply_fluxes(ConservedField& U, const EdgeFluxes& f, const GridSpec& grid, double dt, int first = 0,
                         int last = 3) {
  const double lx = dt / grid.dx(), ly = dt / grid.dy();
  for (int k = first; k <= last; ++k) {
    auto& q = U[k];
    const auto& fx = f.fx[k];
    const auto& fy = f.fy[k];
    for (int j = 0; j < grid.ny; ++j) {
      for (int i = 0; i < grid.nx; ++i) {
        q(i, j) -= lx * (fx(i, j) - fx(i - 1, j)) + ly * (fy(i, j) - fy(i, j - 1));
      }
    }
  }
}

}  // namespace allspeed
