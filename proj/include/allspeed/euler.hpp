// Rescaled Euler equations: equation of state, exact fluxes and the CFL step.
//
//   rho_t + div(rho v) = 0
//   (rho v)_t + div(rho v (x) v + p / eps^2 I) = 0
//   e_t + div((e + p) v) = 0,      e = p / (gamma - 1) + 0.5 eps^2 rho |v|^2
#pragma once

#include <cmath>

#include "allspeed/grid.hpp"

namespace allspeed {

enum class Method { A, B, C };

/// How the relaxation speed a is taken: maximum over the local edge stencil
/// or over the whole grid.
enum class SpeedMode { local, global };

/// Which part of a Method C edge flux the divergence denominator divides.
enum class DenominatorScope {
  /// Only the transport part (q u, central and upwind); the pressure terms
  /// p/eps^2 and p u stay central.
  transport,
  /// The whole numerator, pressure terms included.
  full,
};

struct SchemeConfig {
  double epsilon = 1.0;
  double gamma = 1.4;
  double cfl = 0.9;
  double a_factor = 1.05;
  Method method = Method::A;
  SpeedMode a_mode = SpeedMode::local;
  DenominatorScope c_denominator = DenominatorScope::transport;

  /// Throws ConfigError on eps <= 0, gamma <= 1, cfl outside (0, 1] or a_factor <= 1.
  void validate() const;
};

struct Primitives {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double p = 1.0;
};

double energy_from_primitives(const Primitives& w, const SchemeConfig& cfg);
State conserved_from_primitives(const Primitives& w, const SchemeConfig& cfg);

/// Throws NumericalFailure (NonPositiveDensity / NonPositivePressure /
/// NonFiniteState) for inadmissible states.
Primitives primitives_from_conserved(const State& U, const SchemeConfig& cfg);

/// (rho u, rho u^2 + p/eps^2, rho u v, (e + p) u)
State exact_flux_x(const Primitives& w, const SchemeConfig& cfg);
/// (rho v, rho u v, rho v^2 + p/eps^2, (e + p) v)
State exact_flux_y(const Primitives& w, const SchemeConfig& cfg);

inline double sound_speed(const Primitives& w, const SchemeConfig& cfg) {
  return std::sqrt(cfg.gamma * w.p / w.rho);
}

/// Primitive variables on the whole padded grid (ghosts included).
struct PrimitiveField {
  explicit PrimitiveField(const GridSpec& grid) : rho(grid), u(grid), v(grid), p(grid) {}
  ScalarField rho, u, v, p;
};

/// Converts every padded cell. Ghosts must be filled. Throws NumericalFailure
/// with the cell index on the first inadmissible state.
PrimitiveField to_primitives(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg);

/// Throws NumericalFailure if any interior cell has non-positive density or
/// internal energy, or a non-finite component.
void check_admissible(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg);

/// dt = cfl * min over interior cells of min(dx / (|u| + c/eps), dy / (|v| + c/eps)).
double compute_dt(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg);

}  // namespace allspeed

