#include <doctest.h>

#include <cmath>
#include <numbers>

#include "allspeed/diagnostics.hpp"
#include "allspeed/errors.hpp"
#include "allspeed/method_c.hpp"
#include "allspeed/multid.hpp"
#include "collapse.hpp"
#include "support.hpp"

using namespace allspeed;
using doctest::Approx;

namespace {

// a' = -w b, b' = w a
std::pair<double, double> rotate(double a, double b, double w, double dt) {
  return sequential_ode_step(a, b, [&](double y) { return -w * y; }, [&](double x) { return w * x; }, dt);
}

}  // namespace

TEST_CASE("sequential ODE step on the harmonic oscillator") {
  const double w = 3.0;
  for (double h : {0.1, 1.0, 1.9}) {
    const double dt = h / w;
    // Columns of the one-step matrix.
    const auto [m11, m21] = rotate(1.0, 0.0, w, dt);
    const auto [m12, m22] = rotate(0.0, 1.0, w, dt);
    CHECK(m11 * m22 - m12 * m21 == Approx(1.0).epsilon(1e-14));
    const double tr = m11 + m22;
    CHECK(tr * tr < 4.0);  // complex pair on the unit circle
    double a = 1.0, b = 0.0, amax = 0.0;
    for (int n = 0; n < 100000; ++n) {
      std::tie(a, b) = rotate(a, b, w, dt);
      amax = std::max(amax, std::hypot(a, b));
    }
    // The iterates stay on the invariant ellipse a^2 - h a b + b^2 = 1.
    CHECK(amax < 1.0 / std::sqrt(1.0 - h / 2.0) + 1e-9);
    CHECK(a * a - h * a * b + b * b == Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("beyond the stability limit the iterates grow") {
    double a = 1.0, b = 0.0;
    for (int n = 0; n < 200; ++n) std::tie(a, b) = rotate(a, b, w, 2.1 / w);
    CHECK(std::hypot(a, b) > 1e3);
  }
}

TEST_CASE("Method C momentum phase on a linear pressure at rest") {
  const double alpha = 0.3;
  for (auto scope : {DenominatorScope::transport, DenominatorScope::full}) {
    for (double eps : {1.0, 0.05}) {
      SchemeConfig cfg;
      cfg.epsilon = eps;
      cfg.c_denominator = scope;
      const GridSpec g = testing::square_grid(10, 10, Boundary::zero_gradient, Boundary::zero_gradient);
      const ConservedField U =
          testing::sample(g, cfg, [&](double x, double) { return Primitives{1.0, 0.0, 0.0, 1.0 + alpha * x}; });
      const double dt = 1e-3;
      const SequentialPhaseState ph = momentum_phase(U, g, cfg, dt);
      for (int j = 0; j < g.ny; ++j) {
        for (int i = 1; i < g.nx - 1; ++i) {
          CHECK(ph.mom_x(i, j) == Approx(-dt * alpha / (eps * eps)).epsilon(1e-9));
          CHECK(ph.mom_y(i, j) == 0.0);
          CHECK(ph.u_half(i, j) == Approx(ph.mom_x(i, j)));
        }
      }
    }
  }
}

TEST_CASE("Method C leaves a divergence-free shear flow unchanged") {
  SchemeConfig cfg;
  cfg.epsilon = 0.1;
  const GridSpec g = testing::square_grid(16, 16);
  const ConservedField U = testing::sample(g, cfg, [](double, double y) {
    return Primitives{1.0 + 0.2 * std::cos(2.0 * std::numbers::pi * y), std::sin(2.0 * std::numbers::pi * y), 0.0,
                      1.0};
  });
  const PrimitiveField w = to_primitives(U, g, cfg);
  const DivergenceSet d = divergences(w.u, w.v, g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      CHECK(d.edge_x(i, j) == 0.0);
      CHECK(d.edge_y(i, j) == 0.0);
    }
  }
  const double dt = compute_dt(U, g, cfg);
  const SequentialPhaseState ph = momentum_phase(U, g, cfg, dt);
  CHECK(testing::max_abs_diff(ph.mom_x, U[kMomX], g) < 1e-15);
  const ConservedField V = step_c(U, g, cfg, dt);
  CHECK(testing::max_abs_diff(U, V, g) < 1e-13);
}

TEST_CASE("Method C keeps a constant state") {
  for (auto scope : {DenominatorScope::transport, DenominatorScope::full}) {
    SchemeConfig cfg;
    cfg.c_denominator = scope;
    const GridSpec g = testing::square_grid(12, 8);
    const ConservedField U = testing::sample(g, cfg, [](double, double) { return Primitives{0.7, 0.3, -0.4, 1.2}; });
    const ConservedField V = step_c(U, g, cfg, compute_dt(U, g, cfg));
    for (int k = 0; k < 4; ++k) CHECK(testing::max_abs_diff(U[k], V[k], g) <= 1e-14 * std::abs(U[k](0, 0)));
  }
}

TEST_CASE("Method C conserves mass, momentum and energy on a periodic grid") {
  for (auto scope : {DenominatorScope::transport, DenominatorScope::full}) {
    SchemeConfig cfg;
    cfg.epsilon = 0.3;
    cfg.c_denominator = scope;
    const GridSpec g = testing::square_grid(16, 12);
    ConservedField U = testing::random_field(g, cfg, 14);
    const auto mag = conserved_magnitudes(U, g);
    const auto t0 = conserved_totals(U, g);
    for (int n = 0; n < 20; ++n) U = step_c(U, g, cfg, 0.5 * compute_dt(U, g, cfg));
    const auto t1 = conserved_totals(U, g);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(t1[k] - t0[k]) / mag[k] < 1e-11);
  }
}

TEST_CASE("Method C on y-independent data is the 1D sequential scheme") {
  for (double eps : {1.0, 0.1}) {
    for (int axis : {0, 1}) {
      CAPTURE(eps);
      CAPTURE(axis);
      SchemeConfig cfg;
      cfg.epsilon = eps;
      const GridSpec g = testing::line_grid(24, axis);
      auto line = testing::random_line(24, eps, 80 + axis);
      ConservedField U = testing::embed(line, g, axis);
      const oracle::Params q{cfg.gamma, eps, cfg.a_factor};
      const double h = 1.0 / 24;
      for (int n = 0; n < 5; ++n) {
        const double dt = 0.5 * compute_dt(U, g, cfg);
        U = step_c(U, g, cfg, dt);
        line = oracle::sequential_step(line, dt, h, q);
        CHECK(testing::collapse_error(U, line, g, axis) < 1e-12);
      }
    }
  }
}

TEST_CASE("Method C standing acoustic wave is not damped over 100 periods") {
  for (double eps : {1.0, 0.01}) {
    CAPTURE(eps);
    SchemeConfig cfg;
    cfg.epsilon = eps;
    cfg.method = Method::C;
    const GridSpec g = testing::line_grid(64, 0);
    const double amp = 1e-6, k = 2.0 * std::numbers::pi;
    ConservedField U = testing::sample(g, cfg, [&](double x, double) {
      return Primitives{1.0, 0.0, 0.0, 1.0 + amp * std::cos(k * x)};
    });
    const double c = std::sqrt(cfg.gamma);
    const double period = eps / c;  // unit wavelength, sound speed c / eps
    auto acoustic = [&](const ConservedField& V) {
      double s = 0.0;
      for (int i = 0; i < g.nx; ++i) {
        const Primitives w = primitives_from_conserved(V.at(i, 0), cfg);
        const double dp = w.p - 1.0;
        s += 0.5 * eps * eps * w.rho * w.u * w.u + dp * dp / (2.0 * cfg.gamma);
      }
      return s;
    };
    const double dt = compute_dt(U, g, cfg);
    const int per_period = static_cast<int>(std::ceil(period / dt));
    double first = 0.0, last = 0.0;
    const int periods = 100;
    for (int n = 0; n < periods * per_period; ++n) {
      U = step_c(U, g, cfg, dt);
      const double e = acoustic(U);
      if (n < per_period) first = std::max(first, e);
      if (n >= (periods - 1) * per_period) last = std::max(last, e);
    }
    CHECK(std::abs(last - first) / first < 1e-3);
  }
}
