#include "allspeed/reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "allspeed/errors.hpp"

namespace allspeed {

namespace {

// Pressure function f_K(p) of one side and its derivative.
std::pair<double, double> pressure_function(double p, const Primitives& s, double gamma) {
  const double c = std::sqrt(gamma * s.p / s.rho);
  if (p > s.p) {
    const double A = 2.0 / ((gamma + 1.0) * s.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * s.p;
    const double root = std::sqrt(A / (p + B));
    return {(p - s.p) * root, root * (1.0 - 0.5 * (p - s.p) / (B + p))};
  }
  const double ratio = p / s.p;
  const double f = 2.0 * c / (gamma - 1.0) * (std::pow(ratio, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
  const double df = std::pow(ratio, -(gamma + 1.0) / (2.0 * gamma)) / (s.rho * c);
  return {f, df};
}

}  // namespace

double riemann_star_pressure(const Primitives& L, const Primitives& R, double gamma) {
  const double cL = std::sqrt(gamma * L.p / L.rho), cR = std::sqrt(gamma * R.p / R.rho);
  if (2.0 * (cL + cR) / (gamma - 1.0) <= R.u - L.u) throw std::domain_error("Riemann data generate vacuum");
  // Two-rarefaction guess, then Newton.
  const double z = (gamma - 1.0) / (2.0 * gamma);
  double p = std::pow((cL + cR - 0.5 * (gamma - 1.0) * (R.u - L.u)) / (cL / std::pow(L.p, z) + cR / std::pow(R.p, z)),
                      1.0 / z);
  p = std::max(p, 1e-14);
  for (int it = 0; it < 100; ++it) {
    const auto [fL, dfL] = pressure_function(p, L, gamma);
    const auto [fR, dfR] = pressure_function(p, R, gamma);
    const double next = std::max(p - (fL + fR + R.u - L.u) / (dfL + dfR), 1e-14);
    const double change = 2.0 * std::abs(next - p) / (next + p);
    p = next;
    if (change < 1e-14) break;
  }
  return p;
}

Primitives sod_exact(const Primitives& L, const Primitives& R, double xi, double gamma) {
  const double ps = riemann_star_pressure(L, R, gamma);
  const double us = 0.5 * (L.u + R.u) + 0.5 * (pressure_function(ps, R, gamma).first - pressure_function(ps, L, gamma).first);
  const double gm = (gamma - 1.0) / (gamma + 1.0);

  if (xi <= us) {
    const double c = std::sqrt(gamma * L.p / L.rho);
    if (ps > L.p) {
      const double ratio = ps / L.p;
      const double speed = L.u - c * std::sqrt((gamma + 1.0) / (2.0 * gamma) * ratio + (gamma - 1.0) / (2.0 * gamma));
      if (xi <= speed) return L;
      return {L.rho * (ratio + gm) / (gm * ratio + 1.0), us, 0.0, ps};
    }
    const double cs = c * std::pow(ps / L.p, (gamma - 1.0) / (2.0 * gamma));
    if (xi <= L.u - c) return L;
    if (xi >= us - cs) return {L.rho * std::pow(ps / L.p, 1.0 / gamma), us, 0.0, ps};
    const double fan = 2.0 / (gamma + 1.0) + gm / c * (L.u - xi);
    const double rho = L.rho * std::pow(fan, 2.0 / (gamma - 1.0));
    return {rho, 2.0 / (gamma + 1.0) * (c + 0.5 * (gamma - 1.0) * L.u + xi), 0.0, L.p * std::pow(fan, 2.0 * gamma / (gamma - 1.0))};
  }
  const double c = std::sqrt(gamma * R.p / R.rho);
  if (ps > R.p) {
    const double ratio = ps / R.p;
    const double speed = R.u + c * std::sqrt((gamma + 1.0) / (2.0 * gamma) * ratio + (gamma - 1.0) / (2.0 * gamma));
    if (xi >= speed) return R;
    return {R.rho * (ratio + gm) / (gm * ratio + 1.0), us, 0.0, ps};
  }
  const double cs = c * std::pow(ps / R.p, (gamma - 1.0) / (2.0 * gamma));
  if (xi >= R.u + c) return R;
  if (xi <= us + cs) return {R.rho * std::pow(ps / R.p, 1.0 / gamma), us, 0.0, ps};
  const double fan = 2.0 / (gamma + 1.0) - gm / c * (R.u - xi);
  const double rho = R.rho * std::pow(fan, 2.0 / (gamma - 1.0));
  return {rho, 2.0 / (gamma + 1.0) * (-c + 0.5 * (gamma - 1.0) * R.u + xi), 0.0, R.p * std::pow(fan, 2.0 * gamma / (gamma - 1.0))};
}

namespace {

using Radial = std::array<double, 3>;  // rho, rho u, e

struct RadialPrim {
  double rho, u, p, c;
};

RadialPrim radial_prim(const Radial& U, double gamma) {
  RadialPrim w;
  w.rho = U[0];
  w.u = U[1] / U[0];
  w.p = (gamma - 1.0) * (U[2] - 0.5 * U[1] * w.u);
  if (!(w.rho > 0.0) || !(w.p > 0.0)) {
    throw NumericalFailure(w.rho > 0.0 ? FailureKind::non_positive_pressure : FailureKind::non_positive_density,
                           "radial reference lost positivity");
  }
  w.c = std::sqrt(gamma * w.p / w.rho);
  return w;
}

Radial hll(const Radial& UL, const Radial& UR, double gamma) {
  const RadialPrim L = radial_prim(UL, gamma), R = radial_prim(UR, gamma);
  const Radial FL{UL[1], UL[1] * L.u + L.p, (UL[2] + L.p) * L.u};
  const Radial FR{UR[1], UR[1] * R.u + R.p, (UR[2] + R.p) * R.u};
  const double sL = std::min(L.u - L.c, R.u - R.c);
  const double sR = std::max(L.u + L.c, R.u + R.c);
  if (sL >= 0.0) return FL;
  if (sR <= 0.0) return FR;
  Radial F;
  for (int k = 0; k < 3; ++k) F[k] = (sR * FL[k] - sL * FR[k] + sL * sR * (UR[k] - UL[k])) / (sR - sL);
  return F;
}

}  // namespace

RadialProfile radial_reference(const RadialRiemannParams& prm, int cells, double t_end,
                               const RadialReferenceOptions& opt) {
  if (cells < 2) throw std::invalid_argument("radial_reference needs at least 2 cells");
  const double gamma = opt.gamma;
  const double dr = opt.r_max / cells;
  std::vector<double> rc(cells);
  std::vector<Radial> U(cells + 2);  // one ghost on each side
  const auto to_radial = [&](const Primitives& w) {
    return Radial{w.rho, w.rho * w.u, w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
  };
  for (int k = 0; k < cells; ++k) {
    rc[k] = (k + 0.5) * dr;
    U[k + 1] = to_radial(rc[k] < prm.r0 ? prm.inner : prm.outer);
  }

  std::vector<Radial> F(cells + 1);
  double t = 0.0;
  while (t < t_end) {
    U[0] = {U[1][0], -U[1][1], U[1][2]};
    U[cells + 1] = U[cells];
    double smax = 0.0;
    for (int k = 1; k <= cells; ++k) {
      const RadialPrim w = radial_prim(U[k], gamma);
      smax = std::max(smax, std::abs(w.u) + w.c);
    }
    double dt = opt.cfl * dr / smax;
    const bool last = t + dt >= t_end;
    if (last) dt = t_end - t;
    for (int k = 0; k <= cells; ++k) F[k] = hll(U[k], U[k + 1], gamma);
    for (int k = 1; k <= cells; ++k) {
      const RadialPrim w = radial_prim(U[k], gamma);
      const double geo = dt / rc[k - 1];
      const Radial source{U[k][1], U[k][1] * w.u, (U[k][2] + w.p) * w.u};
      for (int m = 0; m < 3; ++m) U[k][m] -= dt / dr * (F[k][m] - F[k - 1][m]) + geo * source[m];
    }
    t += dt;
    if (last) break;
  }

  RadialProfile out;
  for (int k = 0; k < cells; ++k) {
    const RadialPrim w = radial_prim(U[k + 1], gamma);
    out.r.push_back(rc[k]);
    out.rho.push_back(w.rho);
    out.ur.push_back(w.u);
    out.p.push_back(w.p);
  }
  return out;
}

std::vector<double> lp_advect_1d(std::span<const double> q, std::span<const double> U, double dt, double dx,
                                 double inflow) {
  const std::size_t n = q.size();
  if (U.size() != n + 1) throw std::invalid_argument("lp_advect_1d: need one speed per face");
  for (double s : U) {
    if (!(s > 0.0)) throw std::invalid_argument("lp_advect_1d: face speeds must be positive");
  }
  std::vector<double> flux(n + 1);
  flux[0] = U[0] * inflow;
  for (std::size_t k = 1; k <= n; ++k) {
    const double denom = 1.0 + dt * (U[k] - U[k - 1]) / dx;
    if (!(denom > 0.0)) throw NumericalFailure(FailureKind::non_positive_denominator, "lp_advect_1d denominator");
    flux[k] = U[k] * q[k - 1] / denom;
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = q[i] - dt / dx * (flux[i + 1] - flux[i]);
  return out;
}

}  // namespace allspeed
