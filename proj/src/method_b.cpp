#include "allspeed/method_b.hpp"

#include <sstream>

#include "allspeed/errors.hpp"
#include "allspeed/update.hpp"

namespace allspeed {

namespace {

// Shared by both directions: normal velocity un, edge diffusion terms.
EdgeIntermediate intermediate(double rhoL, double eL, double pL, double unL, double rhoR, double eR, double pR,
                              double unR, double du, double dp, double a, double us, double ps, double eps, int i,
                              int j) {
  const double denomL = 1.0 + rhoL * eps * du / (2.0 * a) - rhoL * dp / (2.0 * a * a);
  const double denomR = 1.0 + rhoR * eps * du / (2.0 * a) + rhoR * dp / (2.0 * a * a);
  if (!(denomL > 0.0) || !(denomR > 0.0)) {
    std::ostringstream msg;
    msg << "intermediate density denominators " << denomL << ", " << denomR << " at edge (" << i << ", " << j << ")";
    throw NumericalFailure(FailureKind::non_positive_intermediate_density, msg.str(), i, j);
  }
  EdgeIntermediate m;
  m.rho_L = rhoL / denomL;
  m.rho_R = rhoR / denomR;
  const double pu = ps * us;
  m.e_L = m.rho_L * (eL / rhoL + eps * (pL * unL - pu) / a);
  m.e_R = m.rho_R * (eR / rhoR + eps * (pu - pR * unR) / a);
  return m;
}

}  // namespace

EdgeIntermediate intermediate_x(const PrimitiveField& w, const ConservedField& U, const EdgeStars& s, int i, int j,
                                const SchemeConfig& cfg) {
  return intermediate(w.rho(i, j), U[kEnergy](i, j), w.p(i, j), w.u(i, j), w.rho(i + 1, j), U[kEnergy](i + 1, j),
                      w.p(i + 1, j), w.u(i + 1, j), s.du_x(i, j), s.dp_x(i, j), s.a_x(i, j), s.ustar(i, j),
                      s.pstar_x(i, j), cfg.epsilon, i, j);
}

EdgeIntermediate intermediate_y(const PrimitiveField& w, const ConservedField& U, const EdgeStars& s, int i, int j,
                                const SchemeConfig& cfg) {
  return intermediate(w.rho(i, j), U[kEnergy](i, j), w.p(i, j), w.v(i, j), w.rho(i, j + 1), U[kEnergy](i, j + 1),
                      w.p(i, j + 1), w.v(i, j + 1), s.dv_y(i, j), s.dp_y(i, j), s.a_y(i, j), s.vstar(i, j),
                      s.pstar_y(i, j), cfg.epsilon, i, j);
}

State flux_b_x(const PrimitiveField& w, const EdgeStars& s, const EdgeIntermediate& m, int i, int j,
               const SchemeConfig& cfg) {
  const double us = s.ustar(i, j), ps = s.pstar_x(i, j);
  const double pressure = ps / (cfg.epsilon * cfg.epsilon);
  if (us > 0.0) {
    return {us * m.rho_L, m.rho_L * us * us + pressure, m.rho_L * us * w.v(i, j), us * (m.e_L + ps)};
  }
  if (us < 0.0) {
    return {us * m.rho_R, m.rho_R * us * us + pressure, m.rho_R * us * w.v(i + 1, j), us * (m.e_R + ps)};
  }
  return {0.0, pressure, 0.0, 0.0};
}

State flux_b_y(const PrimitiveField& w, const EdgeStars& s, const EdgeIntermediate& m, int i, int j,
               const SchemeConfig& cfg) {
  const double vs = s.vstar(i, j), ps = s.pstar_y(i, j);
  const double pressure = ps / (cfg.epsilon * cfg.epsilon);
  if (vs > 0.0) {
    return {vs * m.rho_L, m.rho_L * vs * w.u(i, j), m.rho_L * vs * vs + pressure, vs * (m.e_L + ps)};
  }
  if (vs < 0.0) {
    return {vs * m.rho_R, m.rho_R * vs * w.u(i, j + 1), m.rho_R * vs * vs + pressure, vs * (m.e_R + ps)};
  }
  return {0.0, 0.0, pressure, 0.0};
}

ConservedField step_b(const ConservedField& Un, const GridSpec& grid, const SchemeConfig& cfg, double dt) {
  ConservedField U = Un;
  fill_ghosts(U, grid);
  const PrimitiveField w = to_primitives(U, grid, cfg);
  const EdgeStars stars = star_states(w, grid, cfg);

  EdgeFluxes flux(grid);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = -1; i < grid.nx; ++i) {
      const State f = flux_b_x(w, stars, intermediate_x(w, U, stars, i, j, cfg), i, j, cfg);
      for (int k = 0; k < 4; ++k) flux.fx[k](i, j) = f[k];
    }
  }
  for (int j = -1; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const State f = flux_b_y(w, stars, intermediate_y(w, U, stars, i, j, cfg), i, j, cfg);
      for (int k = 0; k < 4; ++k) flux.fy[k](i, j) = f[k];
    }
  }
  apply_fluxes(U, flux, grid, dt);
  check_admissible(U, grid, cfg);
  fill_ghosts(U, grid);
  return U;
}

}  // namespace allspeed
