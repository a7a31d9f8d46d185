#pragma once

#include <span>
#include <string>

#include "coneforge/dense.hpp"
#include "coneforge/tolerance.hpp"

namespace coneforge {

enum class AlgebraKind { sym_real, lorentz };

const char* to_string(AlgebraKind kind) noexcept;

/// Identifies a simple Euclidean Jordan algebra: its kind, rank r, ambient
/// dimension N and Peirce constant d, with N = r + d r (r-1) / 2.
struct AlgebraDescriptor {
  AlgebraKind kind = AlgebraKind::sym_real;
  int rank = 1;
  int ambient_dim = 1;
  int peirce_constant = 1;

  /// Real symmetric r x r matrices.
  static AlgebraDescriptor sym_real(int r);
  /// R x R^n with the Lorentz product, n >= 2.
  static AlgebraDescriptor lorentz(int n);

  /// r for sym_real, n for lorentz.
  int size_parameter() const noexcept;

  bool operator==(const AlgebraDescriptor&) const = default;
};

std::string describe(const AlgebraDescriptor& desc);

/// A point of the algebra in a fixed orthonormal basis, so inner() is the
/// coordinate dot product.
///
/// sym_real basis: E_11, ..., E_rr, then (E_ij + E_ji)/sqrt(2) for i < j in
/// row-major order. lorentz basis: (x0, x1, ..., xn).
class Element {
 public:
  Element(AlgebraDescriptor desc, Vector coords);

  static Element zero(const AlgebraDescriptor& desc);
  static Element basis(const AlgebraDescriptor& desc, int index);

  const AlgebraDescriptor& descriptor() const noexcept { return desc_; }
  std::span<const double> coords() const noexcept { return coords_; }
  int dim() const noexcept { return desc_.ambient_dim; }
  double operator[](std::size_t i) const { return coords_[i]; }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(double s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, double s) { return a *= s; }
  friend Element operator*(double s, Element a) { return a *= s; }
  friend Element operator-(Element a) { return a *= -1.0; }

 private:
  AlgebraDescriptor desc_;
  Vector coords_;
};

double max_abs_diff(const Element& a, const Element& b);
double max_abs(const Element& a);

/// Dense linear endomorphism of the algebra acting on coordinates.
class Operator {
 public:
  Operator(AlgebraDescriptor desc, Matrix matrix);

  static Operator identity(const AlgebraDescriptor& desc);
  static Operator zero(const AlgebraDescriptor& desc);

  const AlgebraDescriptor& descriptor() const noexcept { return desc_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  Element apply(const Element& x) const;
  /// (*this) o other
  Operator compose(const Operator& other) const;
  Operator transpose() const;
  /// Determinant in the space of endomorphisms.
  double ddet() const;

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, double s);
  friend Operator operator*(double s, const Operator& a) { return a * s; }
  friend Operator operator*(const Operator& a, const Operator& b) { return a.compose(b); }

 private:
  AlgebraDescriptor desc_;
  Matrix matrix_;
};

double max_abs_diff(const Operator& a, const Operator& b);

Element identity(const AlgebraDescriptor& desc);
Element jordan_product(const Element& x, const Element& y);
Element square(const Element& x);

/// Coordinate dot product.
double inner(const Element& x, const Element& y);
/// Trace form tr(xy); the normalization in which primitive idempotents have
/// unit norm. Equals inner() on sym_real and 2 * inner() on lorentz.
double trace_inner(const Element& x, const Element& y);
double trace_norm2(const Element& x);

/// L(x) y = x y
Operator lmap(const Element& x);
/// P(x) = 2 L(x)^2 - L(x^2)
Operator quad_rep(const Element& x);
/// x box y = L(xy) + L(x) L(y) - L(y) L(x)
Operator box(const Element& x, const Element& y);

double det(const Element& x);
double trace(const Element& x);

/// Smallest spectral eigenvalue.
double min_eigenvalue(const Element& x);

Element inverse(const Element& x);
Element sqrt(const Element& x);
Element power(const Element& x, double t);

bool is_in_cone(const Element& x, const Tolerance& tol = {});

void require_same_algebra(const Element& x, const Element& y);

}  // namespace coneforge
