#include "allspeed/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace allspeed {

using std::numbers::pi;

double profile_H(double y, double w) {
  if (y >= -0.25 - 0.5 * w && y < -0.25 + 0.5 * w) return -std::sin(pi * (y + 0.25) / w);
  if (y >= -0.25 + 0.5 * w && y < 0.25 - 0.5 * w) return -1.0;
  if (y >= 0.25 - 0.5 * w && y < 0.25 + 0.5 * w) return std::sin(pi * (y - 0.25) / w);
  return 1.0;
}

GridSpec kh_grid(int nx, int ny) {
  GridSpec g;
  g.nx = nx;
  g.ny = ny;
  g.x0 = 0.0;
  g.x1 = 2.0;
  g.y0 = -0.5;
  g.y1 = 0.5;
  g.bc_x = g.bc_y = Boundary::periodic;
  return g;
}

Scenario init_kh(const GridSpec& grid, const KHParams& prm, const SchemeConfig& cfg) {
  grid.validate();
  if (grid.x0 != 0.0 || grid.x1 != 2.0 || grid.y0 != -0.5 || grid.y1 != 0.5 || grid.bc_x != Boundary::periodic ||
      grid.bc_y != Boundary::periodic) {
    throw std::invalid_argument("Kelvin-Helmholtz needs the periodic domain [0,2] x [-1/2,1/2]");
  }
  if (!(prm.w > 0.0) || !(prm.mach > 0.0)) throw std::invalid_argument("Kelvin-Helmholtz needs w > 0 and M > 0");
  Scenario s{ConservedField(grid), 0.8 / prm.mach};
  for (int j = 0; j < grid.ny; ++j) {
    const double h = profile_H(grid.yc(j), prm.w);
    for (int i = 0; i < grid.nx; ++i) {
      const Primitives w{prm.gamma + prm.r * h, prm.mach * h, prm.delta * prm.mach * std::sin(2.0 * pi * grid.xc(i)),
                         1.0};
      s.field.set(i, j, conserved_from_primitives(w, cfg));
    }
  }
  fill_ghosts(s.field, grid);
  return s;
}

GridSpec radial_grid(int nx, int ny) {
  GridSpec g;
  g.nx = nx;
  g.ny = ny;
  g.bc_x = g.bc_y = Boundary::zero_gradient;
  return g;
}

Scenario init_radial_riemann(const GridSpec& grid, const RadialRiemannParams& prm, const SchemeConfig& cfg) {
  grid.validate();
  if (!(prm.r0 > 0.0)) throw std::invalid_argument("radial Riemann problem needs r0 > 0");
  Scenario s{ConservedField(grid), 0.1};
  const State in = conserved_from_primitives(prm.inner, cfg);
  const State out = conserved_from_primitives(prm.outer, cfg);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const double r = std::hypot(grid.xc(i) - prm.cx, grid.yc(j) - prm.cy);
      s.field.set(i, j, r < prm.r0 ? in : out);
    }
  }
  fill_ghosts(s.field, grid);
  return s;
}

GridSpec sod_grid(int nx, int ny) {
  GridSpec g;
  g.nx = nx;
  g.ny = ny;
  g.y1 = static_cast<double>(ny) / nx;
  g.bc_x = Boundary::zero_gradient;
  g.bc_y = Boundary::periodic;
  return g;
}

Scenario init_sod_1d(const GridSpec& grid, const SchemeConfig& cfg) {
  grid.validate();
  Scenario s{ConservedField(grid), 0.2};
  const State left = conserved_from_primitives({1.0, 0.0, 0.0, 1.0}, cfg);
  const State right = conserved_from_primitives({0.125, 0.0, 0.0, 0.1}, cfg);
  const double mid = 0.5 * (grid.x0 + grid.x1);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) s.field.set(i, j, grid.xc(i) < mid ? left : right);
  }
  fill_ghosts(s.field, grid);
  return s;
}

}  // namespace allspeed
