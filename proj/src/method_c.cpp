#include "allspeed/method_c.hpp"

#include <cmath>
#include <sstream>

#include "allspeed/errors.hpp"
#include "allspeed/multid.hpp"
#include "allspeed/stencil.hpp"
#include "allspeed/update.hpp"

namespace allspeed {

using stencil::transverse_x;
using stencil::transverse_y;

namespace {

double checked_denominator(double dt, double div, int i, int j) {
  const double d = 1.0 + dt * div;
  if (!(d > 0.0)) {
    std::ostringstream msg;
    msg << "divergence denominator " << d << " at edge (" << i << ", " << j << ")";
    throw NumericalFailure(FailureKind::non_positive_denominator, msg.str(), i, j);
  }
  return d;
}

// (transport - upwind) / D + pressure, or everything over D.
double combine(double transport, double pressure, double upwind, double denom, DenominatorScope scope) {
  if (scope == DenominatorScope::full) return (transport + pressure - upwind) / denom;
  return (transport - upwind) / denom + pressure;
}

// 1-2-1 transverse average of the edge sum of a cell quantity, divided by 8.
template <class Cell>
double average_x(Cell&& c, int i, int j) {
  return transverse_y([&](int jj) { return c(i + 1, jj) + c(i, jj); }, j) / 8.0;
}
template <class Cell>
double average_y(Cell&& c, int i, int j) {
  return transverse_x([&](int ii) { return c(ii, j + 1) + c(ii, j); }, i) / 8.0;
}

}  // namespace

SequentialPhaseState momentum_phase(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg,
                                    double dt) {
  const DenominatorScope scope = cfg.c_denominator;
  const PrimitiveField w = to_primitives(U, grid, cfg);
  const DivergenceSet div = divergences(w.u, w.v, grid);
  const double ieps2 = 1.0 / (cfg.epsilon * cfg.epsilon);
  const auto& mx = U[kMomX];
  const auto& my = U[kMomY];

  const auto uu = [&](int i, int j) { return mx(i, j) * w.u(i, j); };
  const auto uv = [&](int i, int j) { return mx(i, j) * w.v(i, j); };
  const auto vv = [&](int i, int j) { return my(i, j) * w.v(i, j); };
  const auto pr = [&](int i, int j) { return w.p(i, j) * ieps2; };

  EdgeFluxes flux(grid);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = -1; i < grid.nx; ++i) {
      const double ubar = 0.5 * (w.u(i, j) + w.u(i + 1, j));
      const double d = checked_denominator(dt, div.edge_x(i, j), i, j);
      const double visc = 0.5 * std::abs(ubar);
      const double pres = average_x(pr, i, j);
      flux.fx[kMomX](i, j) = combine(average_x(uu, i, j), pres, visc * (mx(i + 1, j) - mx(i, j)), d, scope);
      flux.fx[kMomY](i, j) = combine(average_x(uv, i, j), 0.0, visc * (my(i + 1, j) - my(i, j)), d, scope);
    }
  }
  for (int j = -1; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const double vbar = 0.5 * (w.v(i, j) + w.v(i, j + 1));
      const double d = checked_denominator(dt, div.edge_y(i, j), i, j);
      const double visc = 0.5 * std::abs(vbar);
      const double pres = average_y(pr, i, j);
      flux.fy[kMomX](i, j) = combine(average_y(uv, i, j), 0.0, visc * (mx(i, j + 1) - mx(i, j)), d, scope);
      flux.fy[kMomY](i, j) = combine(average_y(vv, i, j), pres, visc * (my(i, j + 1) - my(i, j)), d, scope);
    }
  }

  ConservedField mom(grid);
  mom[kMomX] = mx;
  mom[kMomY] = my;
  apply_fluxes(mom, flux, grid, dt, kMomX, kMomY);
  fill_ghosts(mom[kMomX], grid);
  fill_ghosts(mom[kMomY], grid);

  SequentialPhaseState phase(grid);
  phase.mom_x = std::move(mom[kMomX]);
  phase.mom_y = std::move(mom[kMomY]);
  const auto raw_rho = U[kRho].raw();
  const auto raw_mx = phase.mom_x.raw();
  const auto raw_my = phase.mom_y.raw();
  auto raw_u = phase.u_half.raw();
  auto raw_v = phase.v_half.raw();
  for (std::size_t k = 0; k < raw_rho.size(); ++k) {
    raw_u[k] = raw_mx[k] / raw_rho[k];
    raw_v[k] = raw_my[k] / raw_rho[k];
  }
  return phase;
}

ConservedField scalar_phase(const ConservedField& U, const SequentialPhaseState& phase, const GridSpec& grid,
                            const SchemeConfig& cfg, double dt) {
  const DenominatorScope scope = cfg.c_denominator;
  const PrimitiveField w = to_primitives(U, grid, cfg);
  const DivergenceSet div = divergences(phase.u_half, phase.v_half, grid);
  const auto& rho = U[kRho];
  const auto& e = U[kEnergy];
  const auto& uh = phase.u_half;
  const auto& vh = phase.v_half;

  const auto mass_x = [&](int i, int j) { return phase.mom_x(i, j); };
  const auto mass_y = [&](int i, int j) { return phase.mom_y(i, j); };
  const auto eu = [&](int i, int j) { return e(i, j) * uh(i, j); };
  const auto ev = [&](int i, int j) { return e(i, j) * vh(i, j); };
  const auto pu = [&](int i, int j) { return w.p(i, j) * uh(i, j); };
  const auto pv = [&](int i, int j) { return w.p(i, j) * vh(i, j); };

  EdgeFluxes flux(grid);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = -1; i < grid.nx; ++i) {
      const double ubar = 0.5 * (uh(i, j) + uh(i + 1, j));
      const double d = checked_denominator(dt, div.edge_x(i, j), i, j);
      const double visc = 0.5 * std::abs(ubar);
      flux.fx[kRho](i, j) = combine(average_x(mass_x, i, j), 0.0, visc * (rho(i + 1, j) - rho(i, j)), d, scope);
      flux.fx[kEnergy](i, j) =
          combine(average_x(eu, i, j), average_x(pu, i, j), visc * (e(i + 1, j) - e(i, j)), d, scope);
    }
  }
  for (int j = -1; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const double vbar = 0.5 * (vh(i, j) + vh(i, j + 1));
      const double d = checked_denominator(dt, div.edge_y(i, j), i, j);
      const double visc = 0.5 * std::abs(vbar);
      flux.fy[kRho](i, j) = combine(average_y(mass_y, i, j), 0.0, visc * (rho(i, j + 1) - rho(i, j)), d, scope);
      flux.fy[kEnergy](i, j) =
          combine(average_y(ev, i, j), average_y(pv, i, j), visc * (e(i, j + 1) - e(i, j)), d, scope);
    }
  }

  ConservedField out = U;
  out[kMomX] = phase.mom_x;
  out[kMomY] = phase.mom_y;
  apply_fluxes(out, flux, grid, dt, kRho, kRho);
  apply_fluxes(out, flux, grid, dt, kEnergy, kEnergy);
  return out;
}

ConservedField step_c(const ConservedField& Un, const GridSpec& grid, const SchemeConfig& cfg, double dt) {
  ConservedField U = Un;
  fill_ghosts(U, grid);
  const SequentialPhaseState phase = momentum_phase(U, grid, cfg, dt);
  ConservedField out = scalar_phase(U, phase, grid, cfg, dt);
  check_admissible(out, grid, cfg);
  fill_ghosts(out, grid);
  return out;
}

}  // namespace allspeed
