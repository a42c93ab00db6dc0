// Method A: multi-dimensional all-speed Lagrange-Projection scheme.
//
// The acoustic predictor Q evolves the conserved state through the pressure
// fluxes of the star states only; L = 1 + dt * div(u*, v*) accounts for the
// compression. The advective flux transports Q/L with speed u* upwinded:
//
//   f_{i+1/2,j} = (0, p*/eps^2, 0, p* u*) + (u*/2) {Q/L} - (|u*|/2) [Q/L]
#pragma once

#include "allspeed/euler.hpp"
#include "allspeed/grid.hpp"
#include "allspeed/multid.hpp"

namespace allspeed {

struct AcousticPredictor {
  explicit AcousticPredictor(const GridSpec& grid) : Q(grid), L(grid) {}
  ConservedField Q;
  ScalarField L;
};

/// Fills Q and L on cells [-g+1, nx+g-2] x [-g+1, ny+g-2]. Throws
/// NumericalFailure(non_positive_denominator) if L <= 0 anywhere.
AcousticPredictor acoustic_predictor(const ConservedField& U, const EdgeStars& stars, const GridSpec& grid,
                                     const SchemeConfig& cfg, double dt);

/// Flux through x-edge (i+1/2, j).
State flux_a_x(const AcousticPredictor& pred, const EdgeStars& stars, int i, int j, const SchemeConfig& cfg);
/// Flux through y-edge (i, j+1/2).
State flux_a_y(const AcousticPredictor& pred, const EdgeStars& stars, int i, int j, const SchemeConfig& cfg);

/// One conservative update. The input is not modified; the result has its
/// ghosts filled.
ConservedField step_a(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg, double dt);

}  // namespace allspeed
