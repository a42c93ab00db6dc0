#include "allspeed/method_a.hpp"

#include <cmath>
#include <sstream>

#include "allspeed/errors.hpp"
#include "allspeed/update.hpp"

namespace allspeed {

AcousticPredictor acoustic_predictor(const ConservedField& U, const EdgeStars& s, const GridSpec& grid,
                                     const SchemeConfig& cfg, double dt) {
  AcousticPredictor pred(grid);
  const int g = grid.ghost;
  const double lx = dt / grid.dx(), ly = dt / grid.dy();
  const double ieps2 = 1.0 / (cfg.epsilon * cfg.epsilon);
  for (int j = -g + 1; j <= grid.ny + g - 2; ++j) {
    for (int i = -g + 1; i <= grid.nx + g - 2; ++i) {
      const double dpx = s.pstar_x(i, j) - s.pstar_x(i - 1, j);
      const double dpy = s.pstar_y(i, j) - s.pstar_y(i, j - 1);
      const double dupx = s.ustar(i, j) * s.pstar_x(i, j) - s.ustar(i - 1, j) * s.pstar_x(i - 1, j);
      const double dvpy = s.vstar(i, j) * s.pstar_y(i, j) - s.vstar(i, j - 1) * s.pstar_y(i, j - 1);
      pred.Q[kRho](i, j) = U[kRho](i, j);
      pred.Q[kMomX](i, j) = U[kMomX](i, j) - lx * ieps2 * dpx;
      pred.Q[kMomY](i, j) = U[kMomY](i, j) - ly * ieps2 * dpy;
      pred.Q[kEnergy](i, j) = U[kEnergy](i, j) - lx * dupx - ly * dvpy;
      const double L = 1.0 + lx * (s.ustar(i, j) - s.ustar(i - 1, j)) + ly * (s.vstar(i, j) - s.vstar(i, j - 1));
      if (!(L > 0.0)) {
        std::ostringstream msg;
        msg << "L = " << L << " at cell (" << i << ", " << j << ")";
        throw NumericalFailure(FailureKind::non_positive_denominator, msg.str(), i, j);
      }
      pred.L(i, j) = L;
    }
  }
  return pred;
}

State flux_a_x(const AcousticPredictor& pred, const EdgeStars& s, int i, int j, const SchemeConfig& cfg) {
  const double us = s.ustar(i, j), ps = s.pstar_x(i, j);
  const double iL = 1.0 / pred.L(i, j), iR = 1.0 / pred.L(i + 1, j);
  State f{0.0, ps / (cfg.epsilon * cfg.epsilon), 0.0, ps * us};
  for (int k = 0; k < 4; ++k) {
    const double qL = pred.Q[k](i, j) * iL, qR = pred.Q[k](i + 1, j) * iR;
    f[k] += 0.5 * us * (qR + qL) - 0.5 * std::abs(us) * (qR - qL);
  }
  return f;
}

State flux_a_y(const AcousticPredictor& pred, const EdgeStars& s, int i, int j, const SchemeConfig& cfg) {
  const double vs = s.vstar(i, j), ps = s.pstar_y(i, j);
  const double iL = 1.0 / pred.L(i, j), iR = 1.0 / pred.L(i, j + 1);
  State f{0.0, 0.0, ps / (cfg.epsilon * cfg.epsilon), ps * vs};
  for (int k = 0; k < 4; ++k) {
    const double qL = pred.Q[k](i, j) * iL, qR = pred.Q[k](i, j + 1) * iR;
    f[k] += 0.5 * vs * (qR + qL) - 0.5 * std::abs(vs) * (qR - qL);
  }
  return f;
}

ConservedField step_a(const ConservedField& Un, const GridSpec& grid, const SchemeConfig& cfg, double dt) {
  ConservedField U = Un;
  fill_ghosts(U, grid);
  const PrimitiveField w = to_primitives(U, grid, cfg);
  const EdgeStars stars = star_states(w, grid, cfg);
  const AcousticPredictor pred = acoustic_predictor(U, stars, grid, cfg, dt);

  EdgeFluxes flux(grid);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = -1; i < grid.nx; ++i) {
      const State f = flux_a_x(pred, stars, i, j, cfg);
      for (int k = 0; k < 4; ++k) flux.fx[k](i, j) = f[k];
    }
  }
  for (int j = -1; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const State f = flux_a_y(pred, stars, i, j, cfg);
      for (int k = 0; k < 4; ++k) flux.fy[k](i, j) = f[k];
    }
  }
  apply_fluxes(U, flux, grid, dt);
  check_admissible(U, grid, cfg);
  fill_ghosts(U, grid);
  return U;
}

}  // namespace allspeed
