#pragma once

#include <span>

#include "coneforge/dense.hpp"

namespace coneforge::detail {

// Position of the scaled off-diagonal basis vector for i < j.
inline int offdiag_index(int r, int i, int j) {
  return r + i * (2 * r - i - 1) / 2 + (j - i - 1);
}

// Coordinates -> symmetric matrix, no validation.
Matrix coords_to_matrix(std::span<const double> coords, int r);
// Symmetric matrix -> coordinates; reads the upper triangle.
Vector matrix_to_coords(const Matrix& m);

}  // namespace coneforge::detail
