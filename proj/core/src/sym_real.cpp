#include "coneforge/sym_real.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coneforge/errors.hpp"
#include "coneforge/peirce.hpp"
#include "internal.hpp"

namespace coneforge {

namespace detail {

Matrix coords_to_matrix(std::span<const double> coords, int r) {
  Matrix m(r, r);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < r; ++i) m(i, i) = coords[i];
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const double v = coords[offdiag_index(r, i, j)] * inv_sqrt2;
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

Vector matrix_to_coords(const Matrix& m) {
  const int r = static_cast<int>(m.rows());
  Vector c(r * (r + 1) / 2);
  const double sqrt2 = std::sqrt(2.0);
  for (int i = 0; i < r; ++i) c[i] = m(i, i);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) c[offdiag_index(r, i, j)] = m(i, j) * sqrt2;
  return c;
}

}  // namespace detail

SymMatrix::SymMatrix(const Matrix& m) {
  if (!m.is_square() || m.rows() == 0) throw DimensionMismatch("SymMatrix: matrix must be square");
  const double scale = max_abs(m);
  const double asym = max_abs_diff(m, m.transpose());
  if (asym > 1e-12 * scale)
    throw InvalidInput("SymMatrix: asymmetry " + std::to_string(asym) + " exceeds 1e-12 relative");
  entries_ = (m + m.transpose()) * 0.5;
}

SymMatrix SymMatrix::identity(int r) { return SymMatrix(Matrix::identity(r)); }

SymMatrix SymMatrix::diagonal(std::span<const double> d) { return SymMatrix(Matrix::diagonal(d)); }

Element to_element(const SymMatrix& m) {
  return Element(AlgebraDescriptor::sym_real(m.size()), detail::matrix_to_coords(m.entries()));
}

SymMatrix to_sym_matrix(const Element& x) {
  if (x.descriptor().kind != AlgebraKind::sym_real)
    throw DimensionMismatch("to_sym_matrix: element is not in sym_real");
  return SymMatrix(detail::coords_to_matrix(x.coords(), x.descriptor().rank));
}

Element unit_element(int r, int i, int j) {
  if (i < 0 || j < 0 || i >= r || j >= r) throw IndexOutOfRange("unit_element: index out of range");
  Matrix m(r, r);
  m(i, j) = 1.0;
  m(j, i) = 1.0;
  return to_element(SymMatrix(m));
}

SymEigen eig_jacobi(const SymMatrix& input) {
  const int n = input.size();
  Matrix a = input.entries();
  Matrix v = Matrix::identity(n);

  const double threshold = 1e-13 * frobenius_norm(a);
  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 50;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_norm() > threshold; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (off_norm() > threshold)
    throw NoConvergence("eig_jacobi: off-diagonal norm above threshold after 50 sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });

  SymEigen out{Vector(n), Matrix(n, n)};
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    Vector col = v.column(order[k]);
    // First non-negligible component positive.
    for (double c : col) {
      if (std::abs(c) > 1e-12) {
        if (c < 0)
          for (double& x : col) x = -x;
        break;
      }
    }
    out.eigenvectors.set_column(k, col);
  }
  return out;
}

JordanFrame frame_from_eigenvectors(const Matrix& v) {
  if (!v.is_square() || v.rows() == 0)
    throw FrameIncomplete("frame_from_eigenvectors: matrix must be square");
  const double err = max_abs_diff(v.transpose() * v, Matrix::identity(v.rows()));
  if (err > 1e-10)
    throw FrameIncomplete("frame_from_eigenvectors: columns not orthonormal (" + std::to_string(err) + ")");
  const int r = static_cast<int>(v.rows());
  JordanFrame frame;
  for (int k = 0; k < r; ++k) {
    const Vector col = v.column(k);
    Matrix outer(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) outer(i, j) = col[i] * col[j];
    frame.idempotents.push_back(to_element(SymMatrix(outer)));
  }
  return frame;
}

Matrix FrobeniusMatrix::to_matrix(int r) const {
  if (pivot < 0 || pivot > r - 2 || static_cast<int>(column.size()) != r - pivot - 1)
    throw DimensionMismatch("FrobeniusMatrix: pivot/column incompatible with size " + std::to_string(r));
  Matrix f = Matrix::identity(r);
  for (int j = 0; j < r - pivot - 1; ++j) f(pivot + 1 + j, pivot) = column[j];
  return f;
}

SymMatrix frobenius_matrix_action(const FrobeniusMatrix& f, const SymMatrix& x) {
  const Matrix fm = f.to_matrix(x.size());
  return SymMatrix(fm * x.entries() * fm.transpose());
}

LdlFactors cholesky_ldl(const SymMatrix& m) {
  const int n = m.size();
  LdlFactors out{Matrix::identity(n), Vector(n)};
  Matrix& l = out.unit_lower;
  for (int j = 0; j < n; ++j) {
    double d = m(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k) * out.diag[k];
    if (!(d > 0.0)) throw NotInCone("cholesky_ldl: non-positive pivot " + std::to_string(d));
    out.diag[j] = d;
    for (int i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k) * out.diag[k];
      l(i, j) = s / d;
    }
  }
  return out;
}

}  // namespace coneforge
