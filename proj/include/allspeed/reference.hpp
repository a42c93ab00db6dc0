// Independent reference solutions used to validate the 2D schemes.
//
// None of these share code with the schemes: the exact Riemann solver and the
// radial HLL solver work on the standard (eps = 1) Euler equations.
#pragma once

#include <span>
#include <vector>

#include "allspeed/euler.hpp"
#include "allspeed/scenarios.hpp"

namespace allspeed {

/// Exact self-similar solution of the 1D Riemann problem at xi = x / t.
/// Throws std::domain_error if the data generate vacuum.
Primitives sod_exact(const Primitives& left, const Primitives& right, double xi, double gamma);

/// Pressure in the star region of the exact Riemann solution.
double riemann_star_pressure(const Primitives& left, const Primitives& right, double gamma);

struct RadialProfile {
  std::vector<double> r, rho, ur, p;
};

struct RadialReferenceOptions {
  double r_max = 0.7;
  double cfl = 0.9;
  double gamma = 1.4;
};

/// First-order HLL solution of the cylindrically symmetric equations
///   U_t + F(U)_r = -(1/r) (rho u, rho u^2, u (e + p))
/// on (0, r_max] with a reflective axis and zero-gradient outer boundary.
/// The geometric source is added explicitly with the cell-center radius.
RadialProfile radial_reference(const RadialRiemannParams& params, int cells, double t_end,
                               const RadialReferenceOptions& opt = {});

/// Lagrange-Projection upwind advection for q_t + (U q)_x = 0 with U > 0.
/// q has n cells; speeds has n + 1 entries, speeds[k] at the left face of
/// cell k. The flux through face k >= 1 is
///   U_k q_{k-1} / (1 + dt (U_k - U_{k-1}) / dx),
/// and through face 0 it is U_0 * inflow.
/// Throws std::invalid_argument if a speed is not positive and
/// NumericalFailure if a denominator is not positive.
std::vector<double> lp_advect_1d(std::span<const double> q, std::span<const double> speeds, double dt, double dx,
                                 double inflow = 0.0);

}  // namespace allspeed
