// Cartesian grid geometry and ghost-padded cell storage.
//
// Interior cells are (i, j) with i in [0, nx), j in [0, ny). Every field is
// padded by `ghost` layers on all four sides and stored row-major (i fastest)
// in a single allocation.
#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace allspeed {

enum class Boundary { periodic, zero_gradient };

struct GridSpec {
  int nx = 0;
  int ny = 0;
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;
  int ghost = 2;
  Boundary bc_x = Boundary::periodic;
  Boundary bc_y = Boundary::periodic;

  double dx() const { return (x1 - x0) / nx; }
  double dy() const { return (y1 - y0) / ny; }
  double xc(int i) const { return x0 + (i + 0.5) * dx(); }
  double yc(int j) const { return y0 + (j + 0.5) * dy(); }
  double cell_area() const { return dx() * dy(); }

  /// Throws std::invalid_argument unless nx, ny >= 4, ghost >= 2 and the
  /// domain has positive extent in both directions.
  void validate() const;
};

class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const GridSpec& grid, double init = 0.0);

  double& operator()(int i, int j) { return data_[offset(i, j)]; }
  double operator()(int i, int j) const { return data_[offset(i, j)]; }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int ghost() const { return ghost_; }

  std::span<double> raw() { return data_; }
  std::span<const double> raw() const { return data_; }

  /// Interior row j (length nx) as a contiguous view.
  std::span<const double> row(int j) const {
    return std::span<const double>(data_).subspan(offset(0, j), nx_);
  }

 private:
  std::size_t offset(int i, int j) const {
    return static_cast<std::size_t>(j + ghost_) * stride_ + static_cast<std::size_t>(i + ghost_);
  }

  int nx_ = 0;
  int ny_ = 0;
  int ghost_ = 0;
  std::size_t stride_ = 0;
  std::vector<double> data_;
};

enum Component : int { kRho = 0, kMomX = 1, kMomY = 2, kEnergy = 3 };

/// Conserved vector (rho, rho*u, rho*v, e).
using State = std::array<double, 4>;

struct ConservedField {
  ConservedField() = default;
  explicit ConservedField(const GridSpec& grid) : comp{ScalarField(grid), ScalarField(grid), ScalarField(grid), ScalarField(grid)} {}

  State at(int i, int j) const { return {comp[0](i, j), comp[1](i, j), comp[2](i, j), comp[3](i, j)}; }
  void set(int i, int j, const State& s) {
    for (int k = 0; k < 4; ++k) comp[k](i, j) = s[k];
  }

  ScalarField& operator[](int k) { return comp[k]; }
  const ScalarField& operator[](int k) const { return comp[k]; }

  std::array<ScalarField, 4> comp;
};

/// Fills all ghost layers (corners included) from the interior according to
/// the boundary rule of each direction. x is filled first on interior rows,
/// then y over the full padded width.
void fill_ghosts(ScalarField& field, const GridSpec& grid);
void fill_ghosts(ConservedField& field, const GridSpec& grid);

}  // namespace allspeed
