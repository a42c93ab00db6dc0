// Multi-dimensional building blocks shared by the three schemes: node, edge
// and cell divergences and the star states u*, v*, p* with their relaxation
// speed.
//
// Index conventions (all arrays use the ghost-padded cell layout):
//   x-edge (i, j) is the interface (i+1/2, j) between cells (i, j) and (i+1, j),
//     filled for i in [-g, nx+g-2], j in [-g+1, ny+g-2];
//   y-edge (i, j) is the interface (i, j+1/2), the transpose of the above;
//   node (i, j) is the corner (i+1/2, j+1/2), filled for i in [-g, nx+g-2],
//     j in [-g, ny+g-2].
// Interior x-edges are i in [-1, nx-1], j in [0, ny).
#pragma once

#include "allspeed/euler.hpp"
#include "allspeed/grid.hpp"

namespace allspeed {

struct EdgeStars {
  explicit EdgeStars(const GridSpec& grid)
      : ustar(grid), pstar_x(grid), a_x(grid), du_x(grid), dp_x(grid),
        vstar(grid), pstar_y(grid), a_y(grid), dv_y(grid), dp_y(grid) {}

  // x-edges
  ScalarField ustar, pstar_x, a_x;
  /// Velocity difference feeding p*: dx times the edge divergence.
  ScalarField du_x;
  /// Transverse-averaged pressure jump feeding u*.
  ScalarField dp_x;

  // y-edges
  ScalarField vstar, pstar_y, a_y;
  ScalarField dv_y;
  ScalarField dp_y;
};

struct DivergenceSet {
  explicit DivergenceSet(const GridSpec& grid) : node(grid), edge_x(grid), edge_y(grid), cell(grid) {}
  ScalarField node;
  /// Mean of the two node divergences at the ends of the edge.
  ScalarField edge_x, edge_y;
  /// Mean of the four edge divergences around the cell.
  ScalarField cell;
};

/// Node divergence (1/(2dx)) {[u]_{i+1/2}}_{j+1/2} + (1/(2dy)) {[v]_{j+1/2}}_{i+1/2}.
/// u and v need filled ghosts.
ScalarField node_divergence(const ScalarField& u, const ScalarField& v, const GridSpec& grid);

DivergenceSet divergences(const ScalarField& u, const ScalarField& v, const GridSpec& grid);

/// Relaxation speed per edge: a_factor * max(rho c) over the 2x3 block of
/// cells feeding the edge's star states (or over the whole interior in
/// SpeedMode::global). Written into stars.a_x / stars.a_y.
void relaxation_speed(const PrimitiveField& w, const GridSpec& grid, const SchemeConfig& cfg, EdgeStars& stars);

/// Multi-dimensional star states with 1-2-1 transverse weights:
///   u*_{i+1/2,j} = {{{u}_{i+1/2}}}/8 - D_p / (2 a eps)
///   p*_{i+1/2,j} = {{{p}_{i+1/2}}}/8 - (a eps / 2) D_u
/// with D_p = {{[p]_{i+1/2}}}/4 and D_u = {{[u]_{i+1/2}}}/4 + (dx/dy) [{v}_{i+1/2}]_{j+-1}/4,
/// and the transposed formulas on y-edges. Computes the relaxation speed first.
EdgeStars star_states(const PrimitiveField& w, const GridSpec& grid, const SchemeConfig& cfg);

/// (1/dx) [u*]_{i+-1/2,j} + (1/dy) [v*]_{i,j+-1/2} on cells i in [-g+1, nx+g-2]
/// (and the same range in j).
ScalarField cell_divergence_of_stars(const EdgeStars& stars, const GridSpec& grid);

}  // namespace allspeed
