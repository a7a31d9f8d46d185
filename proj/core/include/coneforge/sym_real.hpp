#pragma once

#include "coneforge/algebra.hpp"
#include "coneforge/dense.hpp"

namespace coneforge {

struct JordanFrame;

/// Real symmetric r x r matrix. Construction symmetrizes as (m + m^T)/2 and
/// rejects inputs whose asymmetry exceeds 1e-12 relative to max |m_ij|.
class SymMatrix {
 public:
  explicit SymMatrix(const Matrix& m);

  static SymMatrix identity(int r);
  static SymMatrix diagonal(std::span<const double> d);

  int size() const noexcept { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const noexcept { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

 private:
  Matrix entries_;
};

Element to_element(const SymMatrix& m);
SymMatrix to_sym_matrix(const Element& x);

/// mu_ii for i == j, otherwise mu_ij + mu_ji (squared trace norm 2).
/// Indices are zero-based.
Element unit_element(int r, int i, int j);

struct SymEigen {
  Vector eigenvalues;   // descending
  Matrix eigenvectors;  // columns, orthonormal
};

/// Cyclic-by-row Jacobi eigensolver.
SymEigen eig_jacobi(const SymMatrix& m);

/// c_i = v_i v_i^T for each column v_i.
JordanFrame frame_from_eigenvectors(const Matrix& v);

/// I + sum_j column[j] * mu_{pivot+1+j, pivot}: identity with a column
/// below diagonal entry (pivot, pivot). Zero-based pivot, so column has
/// length r - pivot - 1.
struct FrobeniusMatrix {
  int pivot = 0;
  Vector column;

  Matrix to_matrix(int r) const;
};

/// F x F^T
SymMatrix frobenius_matrix_action(const FrobeniusMatrix& f, const SymMatrix& x);

struct LdlFactors {
  Matrix unit_lower;
  Vector diag;
};

/// m = L D L^T with L unit lower triangular and D > 0.
LdlFactors cholesky_ldl(const SymMatrix& m);

}  // namespace coneforge
