// Shared helpers for the unit tests.
#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "allspeed/euler.hpp"
#include "allspeed/grid.hpp"

namespace allspeed::testing {

inline GridSpec square_grid(int nx, int ny, Boundary bx = Boundary::periodic, Boundary by = Boundary::periodic) {
  GridSpec g;
  g.nx = nx;
  g.ny = ny;
  g.x1 = 1.0;
  g.y1 = static_cast<double>(ny) / nx;
  g.bc_x = bx;
  g.bc_y = by;
  return g;
}

/// Field from a primitive-valued function of the cell center, ghosts filled.
inline ConservedField sample(const GridSpec& grid, const SchemeConfig& cfg,
                             const std::function<Primitives(double, double)>& w) {
  ConservedField U(grid);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) U.set(i, j, conserved_from_primitives(w(grid.xc(i), grid.yc(j)), cfg));
  }
  fill_ghosts(U, grid);
  return U;
}

/// Smooth-ish random admissible state: values vary by a few tens of percent.
inline ConservedField random_field(const GridSpec& grid, const SchemeConfig& cfg, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  ConservedField U(grid);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const Primitives w{1.0 + 0.3 * d(rng), 0.2 * d(rng), 0.2 * d(rng), 1.0 + 0.3 * d(rng)};
      U.set(i, j, conserved_from_primitives(w, cfg));
    }
  }
  fill_ghosts(U, grid);
  return U;
}

inline double max_abs_diff(const ScalarField& a, const ScalarField& b, const GridSpec& grid) {
  double m = 0.0;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  }
  return m;
}

inline double max_abs_diff(const ConservedField& a, const ConservedField& b, const GridSpec& grid) {
  double m = 0.0;
  for (int k = 0; k < 4; ++k) m = std::max(m, max_abs_diff(a[k], b[k], grid));
  return m;
}

}  // namespace allspeed::testing
