// Initial data for the Kelvin-Helmholtz shear layer, the radial Riemann
// problem and planar Sod.
#pragma once

#include "allspeed/euler.hpp"
#include "allspeed/grid.hpp"

namespace allspeed {

struct KHParams {
  double mach = 1e-2;
  double r = 1e-3;
  double delta = 0.1;
  double w = 1.0 / 16.0;
  double gamma = 1.4;
};

struct RadialRiemannParams {
  double r0 = 0.3;
  Primitives inner{1.0, 0.0, 0.0, 1.0};
  Primitives outer{0.125, 0.0, 0.0, 0.1};
  double cx = 0.5;
  double cy = 0.5;
};

/// Initial field plus the time the scenario is meant to run to.
struct Scenario {
  ConservedField field;
  double t_end = 0.0;
};

/// Vertical shear profile: -1 in the middle band, +1 outside, joined by sine
/// arcs of width w centered on y = -1/4 and y = 1/4 (C^1 everywhere).
double profile_H(double y, double w);

/// Periodic [0,2] x [-1/2,1/2] grid.
GridSpec kh_grid(int nx, int ny);
/// rho = gamma + r H(y), u = M H(y), v = delta M sin(2 pi x), p = 1; runs to 0.8 / M.
/// Throws std::invalid_argument if the grid is not the periodic KH domain.
Scenario init_kh(const GridSpec& grid, const KHParams& params, const SchemeConfig& cfg);

/// [0,1]^2 with zero-gradient boundaries.
GridSpec radial_grid(int nx, int ny);
/// Sharp disc sampled at cell centers; runs to 0.1.
Scenario init_radial_riemann(const GridSpec& grid, const RadialRiemannParams& params, const SchemeConfig& cfg);

/// [0,1] x [0, 4 dx]: zero-gradient in x, periodic in y, square cells when ny = 4.
GridSpec sod_grid(int nx, int ny = 4);
/// Left (1, 0, 0, 1), right (0.125, 0, 0, 0.1), jump at mid-domain; runs to 0.2.
Scenario init_sod_1d(const GridSpec& grid, const SchemeConfig& cfg);

}  // namespace allspeed
