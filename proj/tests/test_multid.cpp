#include <doctest.h>

#include <cmath>
#include <numbers>

#include "allspeed/multid.hpp"
#include "support.hpp"

using namespace allspeed;
using doctest::Approx;

namespace {

struct Velocity {
  ScalarField u, v;
};

template <class FU, class FV>
Velocity velocity(const GridSpec& g, FU fu, FV fv) {
  Velocity w{ScalarField(g), ScalarField(g)};
  const int gh = g.ghost;
  for (int j = -gh; j < g.ny + gh; ++j) {
    for (int i = -gh; i < g.nx + gh; ++i) {
      w.u(i, j) = fu(g.xc(i), g.yc(j));
      w.v(i, j) = fv(g.xc(i), g.yc(j));
    }
  }
  return w;
}

GridSpec open_grid(int n) { return testing::square_grid(n, n, Boundary::zero_gradient, Boundary::zero_gradient); }

}  // namespace

TEST_CASE("node divergence of linear fields") {
  const GridSpec g = open_grid(8);
  const double beta = 0.7;
  SUBCASE("constant velocity") {
    const auto w = velocity(g, [](double, double) { return 0.3; }, [](double, double) { return -1.1; });
    const ScalarField d = node_divergence(w.u, w.v, g);
    for (int j = -2; j <= g.ny; ++j) {
      for (int i = -2; i <= g.nx; ++i) CHECK(d(i, j) == 0.0);
    }
  }
  SUBCASE("solenoidal (beta x, -beta y)") {
    const auto w = velocity(g, [&](double x, double) { return beta * x; }, [&](double, double y) { return -beta * y; });
    const ScalarField d = node_divergence(w.u, w.v, g);
    for (int j = -2; j <= g.ny; ++j) {
      for (int i = -2; i <= g.nx; ++i) CHECK(d(i, j) == Approx(0.0).scale(1.0).epsilon(1e-13));
    }
  }
  SUBCASE("(beta x, 0)") {
    const auto w = velocity(g, [&](double x, double) { return beta * x; }, [](double, double) { return 0.0; });
    const ScalarField d = node_divergence(w.u, w.v, g);
    for (int j = -2; j <= g.ny; ++j) {
      for (int i = -2; i <= g.nx; ++i) CHECK(d(i, j) == Approx(beta).epsilon(1e-12));
    }
  }
}

TEST_CASE("edge and cell divergences are means of the finer ones") {
  GridSpec g = testing::square_grid(9, 7);
  g.y1 = 0.6;  // anisotropic cells
  SchemeConfig cfg;
  const ConservedField U = testing::random_field(g, cfg, 21);
  const PrimitiveField w = to_primitives(U, g, cfg);
  const DivergenceSet d = divergences(w.u, w.v, g);
  for (int j = -1; j <= g.ny; ++j) {
    for (int i = -1; i <= g.nx; ++i) {
      CHECK(d.edge_x(i, j) == Approx(0.5 * (d.node(i, j) + d.node(i, j - 1))).epsilon(1e-14));
      CHECK(d.edge_y(i, j) == Approx(0.5 * (d.node(i, j) + d.node(i - 1, j))).epsilon(1e-14));
      // Cell value from the four corner nodes, computed directly.
      const double nodes = d.node(i, j) + d.node(i - 1, j) + d.node(i, j - 1) + d.node(i - 1, j - 1);
      CHECK(d.cell(i, j) == Approx(0.25 * nodes).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("cell divergence against a brute-force centered stencil") {
  GridSpec g = testing::square_grid(8, 8);
  g.y1 = 0.8;
  SchemeConfig cfg;
  const ConservedField U = testing::random_field(g, cfg, 8);
  const PrimitiveField w = to_primitives(U, g, cfg);
  const DivergenceSet d = divergences(w.u, w.v, g);
  const double dx = g.dx(), dy = g.dy();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      // Averaging nodes, then edges, reduces to a 3x3 tensor stencil:
      // (1/(8 dx)) {{u_{i+1} - u_{i-1}}}_j + (1/(8 dy)) {{v_{j+1} - v_{j-1}}}_i
      double ux = 0.0, vy = 0.0;
      const double wgt[3] = {1.0, 2.0, 1.0};
      for (int k = -1; k <= 1; ++k) {
        ux += wgt[k + 1] * (w.u(i + 1, j + k) - w.u(i - 1, j + k));
        vy += wgt[k + 1] * (w.v(i + k, j + 1) - w.v(i + k, j - 1));
      }
      const double brute = ux / (8.0 * dx) + vy / (8.0 * dy);
      CHECK(d.cell(i, j) == Approx(brute).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("node divergence converges at second order") {
  const double k = 2.0 * std::numbers::pi;
  auto error = [&](int n) {
    const GridSpec g = testing::square_grid(n, n);
    const auto w = velocity(
        g, [&](double x, double y) { return std::sin(k * x) * std::cos(k * y); },
        [&](double x, double y) { return std::cos(k * x) * std::sin(2.0 * k * y); });
    const ScalarField d = node_divergence(w.u, w.v, g);
    double e = 0.0;
    for (int j = 0; j < n - 1; ++j) {
      for (int i = 0; i < n - 1; ++i) {
        const double x = g.x0 + (i + 1) * g.dx();
        const double y = g.y0 + (j + 1) * g.dy();
        const double exact = k * std::cos(k * x) * std::cos(k * y) + 2.0 * k * std::cos(k * x) * std::cos(2.0 * k * y);
        e = std::max(e, std::abs(d(i, j) - exact));
      }
    }
    return e;
  };
  const double e1 = error(32), e2 = error(64), e3 = error(128);
  CHECK(std::log2(e1 / e2) > 1.9);
  CHECK(std::log2(e2 / e3) > 1.9);
}

TEST_CASE("relaxation speed") {
  SchemeConfig cfg;
  const GridSpec g = testing::square_grid(6, 6);
  const ConservedField U = testing::sample(g, cfg, [](double, double) { return Primitives{1.4, 0.1, 0.0, 1.0}; });
  const PrimitiveField w = to_primitives(U, g, cfg);
  EdgeStars s(g);
  relaxation_speed(w, g, cfg, s);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = -1; i < g.nx; ++i) {
      CHECK(s.a_x(i, j) == Approx(1.47));
      CHECK(s.a_y(j, i) == Approx(1.47));
    }
  }

  SUBCASE("local maximum sees the 2x3 block, global sees everything") {
    ConservedField V = U;
    V.set(3, 3, conserved_from_primitives({1.4, 0.0, 0.0, 4.0}, cfg));  // rho c doubles
    fill_ghosts(V, g);
    const PrimitiveField wv = to_primitives(V, g, cfg);
    EdgeStars local(g);
    relaxation_speed(wv, g, cfg, local);
    CHECK(local.a_x(2, 4) == Approx(2.94));
    CHECK(local.a_x(3, 2) == Approx(2.94));
    CHECK(local.a_x(1, 3) == Approx(1.47));
    CHECK(local.a_x(3, 5) == Approx(1.47));
    SchemeConfig gcfg = cfg;
    gcfg.a_mode = SpeedMode::global;
    EdgeStars global(g);
    relaxation_speed(wv, g, gcfg, global);
    CHECK(global.a_x(0, 0) == Approx(2.94));
    CHECK(global.a_y(5, 0) == Approx(2.94));
  }
}

TEST_CASE("star states") {
  SchemeConfig cfg;
  const GridSpec g = open_grid(8);

  SUBCASE("constant state gives back u, v and p") {
    const ConservedField U = testing::sample(g, cfg, [](double, double) { return Primitives{0.9, 0.4, -0.3, 1.3}; });
    const EdgeStars s = star_states(to_primitives(U, g, cfg), g, cfg);
    for (int j = 0; j < g.ny; ++j) {
      for (int i = -1; i < g.nx; ++i) {
        CHECK(s.ustar(i, j) == Approx(0.4));
        CHECK(s.pstar_x(i, j) == Approx(1.3));
        CHECK(s.vstar(j, i) == Approx(-0.3));
        CHECK(s.pstar_y(j, i) == Approx(1.3));
      }
    }
  }

  SUBCASE("linear pressure at rest") {
    const double alpha = 0.2;
    for (double eps : {1.0, 0.1}) {
      cfg.epsilon = eps;
      const ConservedField U =
          testing::sample(g, cfg, [&](double x, double) { return Primitives{1.0, 0.0, 0.0, 1.0 + alpha * x}; });
      const PrimitiveField w = to_primitives(U, g, cfg);
      const EdgeStars s = star_states(w, g, cfg);
      for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx - 1; ++i) {
          const double a = s.a_x(i, j);
          CHECK(s.ustar(i, j) == Approx(-alpha * g.dx() / (2.0 * a * eps)));
          CHECK(s.pstar_x(i, j) == Approx(1.0 + alpha * (g.x0 + (i + 1) * g.dx())));
          CHECK(s.vstar(i, j) == Approx(0.0));
        }
      }
    }
  }

  SUBCASE("divergence-free velocity leaves p* equal to the mean pressure") {
    const double beta = 0.5;
    const ConservedField U = testing::sample(
        g, cfg, [&](double x, double y) { return Primitives{1.0, beta * x, -beta * y, 1.0}; });
    const PrimitiveField w = to_primitives(U, g, cfg);
    const EdgeStars s = star_states(w, g, cfg);
    // The normal jump and the transverse part of D_u cancel.
    for (int j = 1; j < g.ny - 1; ++j) {
      for (int i = 0; i < g.nx - 1; ++i) {
        CHECK(s.du_x(i, j) == Approx(0.0).scale(1.0).epsilon(1e-14));
        CHECK(s.pstar_x(i, j) == Approx(1.0).epsilon(1e-14));
      }
    }
    for (int j = 0; j < g.ny - 1; ++j) {
      for (int i = 1; i < g.nx - 1; ++i) {
        CHECK(s.dv_y(i, j) == Approx(0.0).scale(1.0).epsilon(1e-14));
        CHECK(s.pstar_y(i, j) == Approx(1.0).epsilon(1e-14));
      }
    }
  }

  SUBCASE("D_u is dx times the edge divergence") {
    GridSpec ga = testing::square_grid(10, 6);
    ga.y1 = 0.45;
    const ConservedField U = testing::random_field(ga, cfg, 77);
    const PrimitiveField w = to_primitives(U, ga, cfg);
    const EdgeStars s = star_states(w, ga, cfg);
    const DivergenceSet d = divergences(w.u, w.v, ga);
    for (int j = 0; j < ga.ny; ++j) {
      for (int i = -1; i < ga.nx; ++i) {
        CHECK(s.du_x(i, j) == Approx(ga.dx() * d.edge_x(i, j)).epsilon(1e-12).scale(1.0));
      }
    }
    for (int j = -1; j < ga.ny; ++j) {
      for (int i = 0; i < ga.nx; ++i) {
        CHECK(s.dv_y(i, j) == Approx(ga.dy() * d.edge_y(i, j)).epsilon(1e-12).scale(1.0));
      }
    }
  }

  SUBCASE("y-independent data reduce to the one-dimensional star states") {
    const ConservedField U0 = testing::random_field(g, cfg, 5);
    ConservedField U = U0;
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) U[k](i, j) = U0[k](i, 0);
      }
    }
    fill_ghosts(U, g);
    const PrimitiveField w = to_primitives(U, g, cfg);
    const EdgeStars s = star_states(w, g, cfg);
    for (int i = -1; i < g.nx; ++i) {
      const double a = s.a_x(i, 3);
      const double us = 0.5 * (w.u(i, 0) + w.u(i + 1, 0)) - (w.p(i + 1, 0) - w.p(i, 0)) / (2.0 * a);
      const double ps = 0.5 * (w.p(i, 0) + w.p(i + 1, 0)) - 0.5 * a * (w.u(i + 1, 0) - w.u(i, 0));
      CHECK(s.ustar(i, 3) == Approx(us).epsilon(1e-14));
      CHECK(s.pstar_x(i, 3) == Approx(ps).epsilon(1e-14));
    }
  }
}

TEST_CASE("cell divergence of the stars") {
  SchemeConfig cfg;
  const GridSpec g = open_grid(6);
  const ConservedField U = testing::random_field(g, cfg, 4);
  const EdgeStars s = star_states(to_primitives(U, g, cfg), g, cfg);
  const ScalarField div = cell_divergence_of_stars(s, g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double brute = (s.ustar(i, j) - s.ustar(i - 1, j)) / g.dx() + (s.vstar(i, j) - s.vstar(i, j - 1)) / g.dy();
      CHECK(div(i, j) == Approx(brute));
    }
  }
}
