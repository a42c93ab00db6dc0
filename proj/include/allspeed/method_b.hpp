// Method B: multi-dimensional all-speed relaxation scheme.
//
// The star states are the multi-dimensional u*, v*, p* of multid.hpp. The
// intermediate densities replace the one-dimensional velocity difference by
// the edge divergence D_u:
//
//   rho*_L = rho_L / (1 + rho_L eps D_u / (2a) - rho_L D_p / (2a^2))
//   rho*_R = rho_R / (1 + rho_R eps D_u / (2a) + rho_R D_p / (2a^2))
//   e*_L / rho*_L = e_L / rho_L + eps (p_L u_L - p* u*) / a
//   e*_R / rho*_R = e_R / rho_R + eps (p* u* - p_R u_R) / a
//
// and the flux is the one of the intermediate state on the upwind side of u*.
#pragma once

#include "allspeed/euler.hpp"
#include "allspeed/grid.hpp"
#include "allspeed/multid.hpp"

namespace allspeed {

/// Left/right intermediate states of one edge.
struct EdgeIntermediate {
  double rho_L = 0.0, rho_R = 0.0;
  double e_L = 0.0, e_R = 0.0;
};

/// Intermediate states on x-edge (i+1/2, j). Throws
/// NumericalFailure(non_positive_intermediate_density).
EdgeIntermediate intermediate_x(const PrimitiveField& w, const ConservedField& U, const EdgeStars& s, int i, int j,
                                const SchemeConfig& cfg);
/// Intermediate states on y-edge (i, j+1/2), "left" being cell (i, j).
EdgeIntermediate intermediate_y(const PrimitiveField& w, const ConservedField& U, const EdgeStars& s, int i, int j,
                                const SchemeConfig& cfg);

State flux_b_x(const PrimitiveField& w, const EdgeStars& s, const EdgeIntermediate& m, int i, int j,
               const SchemeConfig& cfg);
State flux_b_y(const PrimitiveField& w, const EdgeStars& s, const EdgeIntermediate& m, int i, int j,
               const SchemeConfig& cfg);

ConservedField step_b(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg, double dt);

}  // namespace allspeed
