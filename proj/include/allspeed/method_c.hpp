// Method C: sequential-explicit central scheme.
//
// The acoustic subsystem is integrated sequentially: momentum is updated
// first from time-n data, then density and energy use the new momentum. Each
// edge flux has the shape
//
//   f_{i+1/2,j} = ( {{{F}_{i+1/2}}}_{j+-1/2} / 8 - (|u_bar|/2) [q]_{i+1/2,j} ) / (1 + dt div_{i+1/2,j})
//
// where F is the physical flux, u_bar = {u}_{i+1/2,j} / 2 and div_{i+1/2,j}
// the mean of the two node divergences at the ends of the edge. Which part of
// the flux is divided by the denominator is set by SchemeConfig::c_denominator.
#pragma once

#include <utility>

#include "allspeed/euler.hpp"
#include "allspeed/grid.hpp"

namespace allspeed {

/// Sequential forward Euler for the off-diagonal system a' = f(b), b' = g(a):
/// a1 = a + dt f(b), then b1 = b + dt g(a1).
template <class F, class G>
std::pair<double, double> sequential_ode_step(double a, double b, F&& f, G&& g, double dt) {
  const double a1 = a + dt * f(b);
  const double b1 = b + dt * g(a1);
  return {a1, b1};
}

struct SequentialPhaseState {
  explicit SequentialPhaseState(const GridSpec& grid) : mom_x(grid), mom_y(grid), u_half(grid), v_half(grid) {}
  /// Momentum after the first phase, ghosts filled.
  ScalarField mom_x, mom_y;
  /// New momentum divided by the time-n density.
  ScalarField u_half, v_half;
};

/// Phase 1. U must have filled ghosts. Throws
/// NumericalFailure(non_positive_denominator).
SequentialPhaseState momentum_phase(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg,
                                    double dt);

/// Phase 2: density and energy from the new momentum. Returns the complete
/// time-(n+1) field.
ConservedField scalar_phase(const ConservedField& U, const SequentialPhaseState& phase, const GridSpec& grid,
                            const SchemeConfig& cfg, double dt);

ConservedField step_c(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg, double dt);

}  // namespace allspeed
