#include "allspeed/euler.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "allspeed/errors.hpp"

namespace allspeed {

void SchemeConfig::validate() const {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(gamma > 1.0)) throw ConfigError("gamma must exceed 1");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  if (!(a_factor > 1.0)) throw ConfigError("a_factor must exceed 1");
}

double energy_from_primitives(const Primitives& w, const SchemeConfig& cfg) {
  const double eps2 = cfg.epsilon * cfg.epsilon;
  return w.p / (cfg.gamma - 1.0) + 0.5 * eps2 * w.rho * (w.u * w.u + w.v * w.v);
}

State conserved_from_primitives(const Primitives& w, const SchemeConfig& cfg) {
  return {w.rho, w.rho * w.u, w.rho * w.v, energy_from_primitives(w, cfg)};
}

Primitives primitives_from_conserved(const State& U, const SchemeConfig& cfg) {
  for (double c : U) {
    if (!std::isfinite(c)) throw NumericalFailure(FailureKind::non_finite_state, "non-finite conserved state");
  }
  if (!(U[kRho] > 0.0)) {
    std::ostringstream msg;
    msg << "rho = " << U[kRho];
    throw NumericalFailure(FailureKind::non_positive_density, msg.str());
  }
  Primitives w;
  w.rho = U[kRho];
  w.u = U[kMomX] / w.rho;
  w.v = U[kMomY] / w.rho;
  const double eps2 = cfg.epsilon * cfg.epsilon;
  w.p = (cfg.gamma - 1.0) * (U[kEnergy] - 0.5 * eps2 * w.rho * (w.u * w.u + w.v * w.v));
  if (!(w.p > 0.0)) {
    std::ostringstream msg;
    msg << "p = " << w.p;
    throw NumericalFailure(FailureKind::non_positive_pressure, msg.str());
  }
  return w;
}

State exact_flux_x(const Primitives& w, const SchemeConfig& cfg) {
  const double e = energy_from_primitives(w, cfg);
  const double eps2 = cfg.epsilon * cfg.epsilon;
  return {w.rho * w.u, w.rho * w.u * w.u + w.p / eps2, w.rho * w.u * w.v, (e + w.p) * w.u};
}

State exact_flux_y(const Primitives& w, const SchemeConfig& cfg) {
  const double e = energy_from_primitives(w, cfg);
  const double eps2 = cfg.epsilon * cfg.epsilon;
  return {w.rho * w.v, w.rho * w.u * w.v, w.rho * w.v * w.v + w.p / eps2, (e + w.p) * w.v};
}

namespace {

[[noreturn]] void rethrow_at(const NumericalFailure& f, int i, int j) {
  std::ostringstream msg;
  msg << f.what() << " at cell (" << i << ", " << j << ")";
  throw NumericalFailure(f.kind(), msg.str(), i, j);
}

}  // namespace

PrimitiveField to_primitives(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg) {
  PrimitiveField w(grid);
  const int g = grid.ghost;
  const double eps2 = cfg.epsilon * cfg.epsilon;
  const double gm1 = cfg.gamma - 1.0;
  for (int j = -g; j < grid.ny + g; ++j) {
    for (int i = -g; i < grid.nx + g; ++i) {
      const double rho = U[kRho](i, j);
      const double u = U[kMomX](i, j) / rho;
      const double v = U[kMomY](i, j) / rho;
      const double p = gm1 * (U[kEnergy](i, j) - 0.5 * eps2 * rho * (u * u + v * v));
      if (!(rho > 0.0) || !(p > 0.0) || !std::isfinite(u) || !std::isfinite(v) || !std::isfinite(p)) {
        try {
          primitives_from_conserved(U.at(i, j), cfg);
        } catch (const NumericalFailure& f) {
          rethrow_at(f, i, j);
        }
        throw NumericalFailure(FailureKind::non_finite_state, "non-finite primitive state", i, j);
      }
      w.rho(i, j) = rho;
      w.u(i, j) = u;
      w.v(i, j) = v;
      w.p(i, j) = p;
    }
  }
  return w;
}

void check_admissible(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg) {
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      try {
        primitives_from_conserved(U.at(i, j), cfg);
      } catch (const NumericalFailure& f) {
        rethrow_at(f, i, j);
      }
    }
  }
}

double compute_dt(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg) {
  const double dx = grid.dx(), dy = grid.dy();
  double dt = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      Primitives w;
      try {
        w = primitives_from_conserved(U.at(i, j), cfg);
      } catch (const NumericalFailure& f) {
        throw NumericalFailure(FailureKind::non_finite_state,
                               std::string("cannot compute time step: ") + f.what(), i, j);
      }
      const double c = sound_speed(w, cfg) / cfg.epsilon;
      dt = std::min({dt, dx / (std::abs(w.u) + c), dy / (std::abs(w.v) + c)});
    }
  }
  if (!std::isfinite(dt)) throw NumericalFailure(FailureKind::non_finite_state, "non-finite time step");
  return cfg.cfl * dt;
}

}  // namespace allspeed
