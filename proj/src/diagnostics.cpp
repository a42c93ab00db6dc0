#include "allspeed/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace allspeed {

double kinetic_energy_total(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg) {
  const double eps2 = cfg.epsilon * cfg.epsilon;
  double sum = 0.0;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const double rho = U[kRho](i, j), mx = U[kMomX](i, j), my = U[kMomY](i, j);
      sum += 0.5 * eps2 * (mx * mx + my * my) / rho;
    }
  }
  return sum * grid.cell_area();
}

State conserved_totals(const ConservedField& U, const GridSpec& grid) {
  State t{};
  for (int k = 0; k < 4; ++k) {
    double s = 0.0;
    for (int j = 0; j < grid.ny; ++j) {
      for (int i = 0; i < grid.nx; ++i) s += U[k](i, j);
    }
    t[k] = s * grid.cell_area();
  }
  return t;
}

State conserved_magnitudes(const ConservedField& U, const GridSpec& grid) {
  State t{};
  for (int k = 0; k < 4; ++k) {
    double s = 0.0;
    for (int j = 0; j < grid.ny; ++j) {
      for (int i = 0; i < grid.nx; ++i) s += std::abs(U[k](i, j));
    }
    t[k] = s * grid.cell_area();
  }
  return t;
}

double decay_fraction(const RunRecord& record) {
  if (record.kinetic_energy.empty()) throw std::invalid_argument("decay_fraction: empty record");
  const double e0 = record.kinetic_energy.front();
  if (e0 == 0.0) return 0.0;
  return 100.0 * (1.0 - record.kinetic_energy.back() / e0);
}

std::vector<ScatterRow> radial_scatter(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg,
                                       double cx, double cy) {
  std::vector<ScatterRow> rows;
  rows.reserve(static_cast<std::size_t>(grid.nx) * grid.ny);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const Primitives w = primitives_from_conserved(U.at(i, j), cfg);
      const double dx = grid.xc(i) - cx, dy = grid.yc(j) - cy;
      const double r = std::hypot(dx, dy);
      const double ur = r > 0.0 ? (w.u * dx + w.v * dy) / r : 0.0;
      rows.push_back({r, w.rho, ur, w.p});
    }
  }
  return rows;
}

std::vector<double> bin_average(const std::vector<double>& r, const std::vector<double>& values, double bin_width,
                                double r_max) {
  if (r.size() != values.size()) throw std::invalid_argument("bin_average: size mismatch");
  const auto nbins = static_cast<std::size_t>(std::ceil(r_max / bin_width - 1e-12));
  std::vector<double> sum(nbins, 0.0);
  std::vector<std::size_t> count(nbins, 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] < 0.0 || r[k] >= r_max) continue;
    const auto b = static_cast<std::size_t>(r[k] / bin_width);
    if (b >= nbins) continue;
    sum[b] += values[k];
    ++count[b];
  }
  for (std::size_t b = 0; b < nbins; ++b) {
    sum[b] = count[b] ? sum[b] / static_cast<double>(count[b]) : std::numeric_limits<double>::quiet_NaN();
  }
  return sum;
}

}  // namespace allspeed
