#include "allspeed/multid.hpp"

#include <algorithm>
#include <cmath>

#include "allspeed/stencil.hpp"

namespace allspeed {

using stencil::transverse_x;
using stencil::transverse_y;

ScalarField node_divergence(const ScalarField& u, const ScalarField& v, const GridSpec& grid) {
  ScalarField node(grid);
  const int g = grid.ghost;
  const double hx = 1.0 / (2.0 * grid.dx());
  const double hy = 1.0 / (2.0 * grid.dy());
  for (int j = -g; j <= grid.ny + g - 2; ++j) {
    for (int i = -g; i <= grid.nx + g - 2; ++i) {
      const double ux = (u(i + 1, j + 1) - u(i, j + 1)) + (u(i + 1, j) - u(i, j));
      const double vy = (v(i + 1, j + 1) - v(i + 1, j)) + (v(i, j + 1) - v(i, j));
      node(i, j) = hx * ux + hy * vy;
    }
  }
  return node;
}

DivergenceSet divergences(const ScalarField& u, const ScalarField& v, const GridSpec& grid) {
  DivergenceSet d(grid);
  d.node = node_divergence(u, v, grid);
  const int g = grid.ghost;
  for (int j = -g + 1; j <= grid.ny + g - 2; ++j) {
    for (int i = -g; i <= grid.nx + g - 2; ++i) {
      d.edge_x(i, j) = 0.5 * (d.node(i, j) + d.node(i, j - 1));
    }
  }
  for (int j = -g; j <= grid.ny + g - 2; ++j) {
    for (int i = -g + 1; i <= grid.nx + g - 2; ++i) {
      d.edge_y(i, j) = 0.5 * (d.node(i, j) + d.node(i - 1, j));
    }
  }
  for (int j = -g + 1; j <= grid.ny + g - 2; ++j) {
    for (int i = -g + 1; i <= grid.nx + g - 2; ++i) {
      d.cell(i, j) = 0.25 * ((d.edge_x(i, j) + d.edge_x(i - 1, j)) + (d.edge_y(i, j) + d.edge_y(i, j - 1)));
    }
  }
  return d;
}

void relaxation_speed(const PrimitiveField& w, const GridSpec& grid, const SchemeConfig& cfg, EdgeStars& stars) {
  const int g = grid.ghost;
  ScalarField impedance(grid);
  double global_max = 0.0;
  for (int j = -g; j < grid.ny + g; ++j) {
    for (int i = -g; i < grid.nx + g; ++i) {
      impedance(i, j) = std::sqrt(cfg.gamma * w.p(i, j) * w.rho(i, j));
      if (i >= 0 && i < grid.nx && j >= 0 && j < grid.ny) global_max = std::max(global_max, impedance(i, j));
    }
  }
  const double K = cfg.a_factor;
  if (cfg.a_mode == SpeedMode::global) {
    for (auto& x : stars.a_x.raw()) x = K * global_max;
    for (auto& x : stars.a_y.raw()) x = K * global_max;
    return;
  }
  for (int j = -g + 1; j <= grid.ny + g - 2; ++j) {
    for (int i = -g; i <= grid.nx + g - 2; ++i) {
      stars.a_x(i, j) = K * std::max({impedance(i, j - 1), impedance(i, j), impedance(i, j + 1),
                                      impedance(i + 1, j - 1), impedance(i + 1, j), impedance(i + 1, j + 1)});
    }
  }
  for (int j = -g; j <= grid.ny + g - 2; ++j) {
    for (int i = -g + 1; i <= grid.nx + g - 2; ++i) {
      stars.a_y(i, j) = K * std::max({impedance(i - 1, j), impedance(i, j), impedance(i + 1, j),
                                      impedance(i - 1, j + 1), impedance(i, j + 1), impedance(i + 1, j + 1)});
    }
  }
}

EdgeStars star_states(const PrimitiveField& w, const GridSpec& grid, const SchemeConfig& cfg) {
  EdgeStars s(grid);
  relaxation_speed(w, grid, cfg, s);
  const int g = grid.ghost;
  const double eps = cfg.epsilon;
  const double rx = grid.dx() / grid.dy();
  const double ry = grid.dy() / grid.dx();
  const auto& u = w.u;
  const auto& v = w.v;
  const auto& p = w.p;

  for (int j = -g + 1; j <= grid.ny + g - 2; ++j) {
    for (int i = -g; i <= grid.nx + g - 2; ++i) {
      const double su = transverse_y([&](int jj) { return u(i + 1, jj) + u(i, jj); }, j);
      const double sp = transverse_y([&](int jj) { return p(i + 1, jj) + p(i, jj); }, j);
      const double ju = transverse_y([&](int jj) { return u(i + 1, jj) - u(i, jj); }, j);
      const double jp = transverse_y([&](int jj) { return p(i + 1, jj) - p(i, jj); }, j);
      const double tv = (v(i + 1, j + 1) + v(i, j + 1)) - (v(i + 1, j - 1) + v(i, j - 1));
      const double du = 0.25 * ju + rx * 0.25 * tv;
      const double dp = 0.25 * jp;
      const double a = s.a_x(i, j);
      s.du_x(i, j) = du;
      s.dp_x(i, j) = dp;
      s.ustar(i, j) = su / 8.0 - dp / (2.0 * a * eps);
      s.pstar_x(i, j) = sp / 8.0 - 0.5 * a * eps * du;
    }
  }
  for (int j = -g; j <= grid.ny + g - 2; ++j) {
    for (int i = -g + 1; i <= grid.nx + g - 2; ++i) {
      const double sv = transverse_x([&](int ii) { return v(ii, j + 1) + v(ii, j); }, i);
      const double sp = transverse_x([&](int ii) { return p(ii, j + 1) + p(ii, j); }, i);
      const double jv = transverse_x([&](int ii) { return v(ii, j + 1) - v(ii, j); }, i);
      const double jp = transverse_x([&](int ii) { return p(ii, j + 1) - p(ii, j); }, i);
      const double tu = (u(i + 1, j + 1) + u(i + 1, j)) - (u(i - 1, j + 1) + u(i - 1, j));
      const double dv = 0.25 * jv + ry * 0.25 * tu;
      const double dp = 0.25 * jp;
      const double a = s.a_y(i, j);
      s.dv_y(i, j) = dv;
      s.dp_y(i, j) = dp;
      s.vstar(i, j) = sv / 8.0 - dp / (2.0 * a * eps);
      s.pstar_y(i, j) = sp / 8.0 - 0.5 * a * eps * dv;
    }
  }
  return s;
}

ScalarField cell_divergence_of_stars(const EdgeStars& stars, const GridSpec& grid) {
  ScalarField div(grid);
  const int g = grid.ghost;
  const double idx = 1.0 / grid.dx(), idy = 1.0 / grid.dy();
  for (int j = -g + 1; j <= grid.ny + g - 2; ++j) {
    for (int i = -g + 1; i <= grid.nx + g - 2; ++i) {
      div(i, j) = idx * (stars.ustar(i, j) - stars.ustar(i - 1, j)) + idy * (stars.vstar(i, j) - stars.vstar(i, j - 1));
    }
  }
  return div;
}

}  // namespace allspeed
