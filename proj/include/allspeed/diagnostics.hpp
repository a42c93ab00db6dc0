#pragma once

#include <string>
#include <vector>

#include "allspeed/euler.hpp"
#include "allspeed/grid.hpp"

namespace allspeed {

struct DumpEntry {
  int step = 0;
  double time = 0.0;
  std::string path;
};

struct RunRecord {
  std::vector<double> times;
  std::vector<double> kinetic_energy;
  std::vector<State> totals;
  std::vector<DumpEntry> dumps;
  int steps = 0;
  /// Steps that had to be repeated with a halved time step.
  int retries = 0;
};

/// Sum over interior cells of 0.5 eps^2 rho (u^2 + v^2) dx dy.
double kinetic_energy_total(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg);

/// Integrals of the four conserved quantities over the interior.
State conserved_totals(const ConservedField& U, const GridSpec& grid);

/// Sum over interior cells of |U_k| dx dy; the scale against which
/// conservation drift is measured (totals of zero-mean components vanish).
State conserved_magnitudes(const ConservedField& U, const GridSpec& grid);

/// 100 (1 - E_kin(end) / E_kin(0)). Throws std::invalid_argument on an empty record.
double decay_fraction(const RunRecord& record);

struct ScatterRow {
  double r, rho, ur, p;
};

/// One row per interior cell, row-major, r measured from (cx, cy).
std::vector<ScatterRow> radial_scatter(const ConservedField& U, const GridSpec& grid, const SchemeConfig& cfg,
                                       double cx, double cy);

/// Mean of `values` over bins [k w, (k+1) w) in r, for k w < r_max. Empty
/// bins hold NaN.
std::vector<double> bin_average(const std::vector<double>& r, const std::vector<double>& values, double bin_width,
                                double r_max);

}  // namespace allspeed
