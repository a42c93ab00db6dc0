// Jump [.] and sum {.} bracket operators.
//
// One-dimensional forms act on a slice of cell values a[i] or of interface
// values b[k] (b[k] holds b_{k+1/2}). They check their indices and throw
// std::out_of_range. The two-dimensional forms act on ghost-padded fields and
// are unchecked; they are the building blocks of the flux kernels.
//
// Sums carry no hidden factors: an average is 0.5 * ssum.
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

#include "allspeed/grid.hpp"

namespace allspeed::stencil {

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw std::out_of_range(what);
}
}  // namespace detail

/// [a]_{i+1/2} = a_{i+1} - a_i
inline double jump(std::span<const double> a, std::size_t i) {
  detail::require(i + 1 < a.size(), "jump: interface index out of range");
  return a[i + 1] - a[i];
}

/// {a}_{i+1/2} = a_{i+1} + a_i
inline double ssum(std::span<const double> a, std::size_t i) {
  detail::require(i + 1 < a.size(), "ssum: interface index out of range");
  return a[i + 1] + a[i];
}

/// [a]_{i+-1} = a_{i+1} - a_{i-1}, centered on cell i.
inline double jump_wide(std::span<const double> a, std::size_t i) {
  detail::require(i >= 1 && i + 1 < a.size(), "jump_wide: cell index out of range");
  return a[i + 1] - a[i - 1];
}

inline double ssum_wide(std::span<const double> a, std::size_t i) {
  detail::require(i >= 1 && i + 1 < a.size(), "ssum_wide: cell index out of range");
  return a[i + 1] + a[i - 1];
}

/// [b]_{i+-1/2} = b_{i+1/2} - b_{i-1/2} for interface values, centered on cell i.
inline double jump_faces(std::span<const double> b, std::size_t i) {
  detail::require(i >= 1 && i < b.size(), "jump_faces: cell index out of range");
  return b[i] - b[i - 1];
}

inline double ssum_faces(std::span<const double> b, std::size_t i) {
  detail::require(i >= 1 && i < b.size(), "ssum_faces: cell index out of range");
  return b[i] + b[i - 1];
}

/// [[a]]_{i+-1/2} = a_{i+1} - 2 a_i + a_{i-1}
inline double second_jump(std::span<const double> a, std::size_t i) {
  detail::require(i >= 1 && i + 1 < a.size(), "second_jump: cell index out of range");
  return (a[i + 1] - a[i]) - (a[i] - a[i - 1]);
}

// Two-dimensional forms. The first index is always x.

/// [a]_{i+1/2,j}
inline double jump_x(const ScalarField& a, int i, int j) { return a(i + 1, j) - a(i, j); }
/// {a}_{i+1/2,j}
inline double ssum_x(const ScalarField& a, int i, int j) { return a(i + 1, j) + a(i, j); }
/// [a]_{i,j+1/2}
inline double jump_y(const ScalarField& a, int i, int j) { return a(i, j + 1) - a(i, j); }
/// {a}_{i,j+1/2}
inline double ssum_y(const ScalarField& a, int i, int j) { return a(i, j + 1) + a(i, j); }

/// {{ op(i, .) }}_{j+-1/2}: rows j-1, j, j+1 with weights 1, 2, 1.
template <class RowOp>
inline double transverse_y(RowOp&& op, int j) {
  return op(j - 1) + 2.0 * op(j) + op(j + 1);
}

/// {{ op(., j) }}_{i+-1/2}: columns i-1, i, i+1 with weights 1, 2, 1.
template <class ColOp>
inline double transverse_x(ColOp&& op, int i) {
  return op(i - 1) + 2.0 * op(i) + op(i + 1);
}

}  // namespace allspeed::stencil
