#include "coneforge/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "coneforge/errors.hpp"
#include "coneforge/peirce.hpp"
#include "internal.hpp"

namespace coneforge {

const char* to_string(AlgebraKind kind) noexcept {
  return kind == AlgebraKind::sym_real ? "sym_real" : "lorentz";
}

AlgebraDescriptor AlgebraDescriptor::sym_real(int r) {
  if (r < 1) throw InvalidInput("sym_real: rank must be positive");
  return {AlgebraKind::sym_real, r, r * (r + 1) / 2, 1};
}

AlgebraDescriptor AlgebraDescriptor::lorentz(int n) {
  if (n < 2) throw InvalidInput("lorentz: n must be at least 2");
  return {AlgebraKind::lorentz, 2, n + 1, n - 1};
}

int AlgebraDescriptor::size_parameter() const noexcept {
  return kind == AlgebraKind::sym_real ? rank : ambient_dim - 1;
}

std::string describe(const AlgebraDescriptor& desc) {
  return desc.kind == AlgebraKind::sym_real
             ? "sym_real(r=" + std::to_string(desc.rank) + ")"
             : "lorentz(n=" + std::to_string(desc.size_parameter()) + ")";
}

// --- Element --------------------------------------------------------------

Element::Element(AlgebraDescriptor desc, Vector coords) : desc_(desc), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != desc_.ambient_dim)
    throw DimensionMismatch("Element: expected " + std::to_string(desc_.ambient_dim) +
                            " coordinates for " + describe(desc_) + ", got " +
                            std::to_string(coords_.size()));
  for (double v : coords_)
    if (!std::isfinite(v)) throw InvalidInput("Element: non-finite coordinate");
}

Element Element::zero(const AlgebraDescriptor& desc) {
  return Element(desc, Vector(desc.ambient_dim, 0.0));
}

Element Element::basis(const AlgebraDescriptor& desc, int index) {
  if (index < 0 || index >= desc.ambient_dim) throw IndexOutOfRange("Element::basis");
  Vector v(desc.ambient_dim, 0.0);
  v[index] = 1.0;
  return Element(desc, std::move(v));
}

Element& Element::operator+=(const Element& o) {
  require_same_algebra(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_algebra(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Element& Element::operator*=(double s) {
  for (double& v : coords_) v *= s;
  return *this;
}

double max_abs_diff(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return max_abs_diff(a.coords(), b.coords());
}

double max_abs(const Element& a) { return max_abs(a.coords()); }

void require_same_algebra(const Element& x, const Element& y) {
  if (!(x.descriptor() == y.descriptor()))
    throw DimensionMismatch("elements of " + describe(x.descriptor()) + " and " +
                            describe(y.descriptor()));
}

// --- Operator -------------------------------------------------------------

Operator::Operator(AlgebraDescriptor desc, Matrix matrix) : desc_(desc), matrix_(std::move(matrix)) {
  const auto n = static_cast<std::size_t>(desc_.ambient_dim);
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw DimensionMismatch("Operator: matrix must be N x N for " + describe(desc_));
}

Operator Operator::identity(const AlgebraDescriptor& desc) {
  return Operator(desc, Matrix::identity(desc.ambient_dim));
}

Operator Operator::zero(const AlgebraDescriptor& desc) {
  return Operator(desc, Matrix(desc.ambient_dim, desc.ambient_dim));
}

Element Operator::apply(const Element& x) const {
  if (!(x.descriptor() == desc_)) throw DimensionMismatch("Operator::apply: algebra mismatch");
  return Element(desc_, matrix_.apply(x.coords()));
}

Operator Operator::compose(const Operator& other) const {
  if (!(other.desc_ == desc_)) throw DimensionMismatch("Operator::compose: algebra mismatch");
  return Operator(desc_, matrix_ * other.matrix_);
}

Operator Operator::transpose() const { return Operator(desc_, matrix_.transpose()); }

double Operator::ddet() const { return determinant(matrix_); }

Operator operator+(const Operator& a, const Operator& b) {
  if (!(a.desc_ == b.desc_)) throw DimensionMismatch("Operator +: algebra mismatch");
  return Operator(a.desc_, a.matrix_ + b.matrix_);
}

Operator operator-(const Operator& a, const Operator& b) {
  if (!(a.desc_ == b.desc_)) throw DimensionMismatch("Operator -: algebra mismatch");
  return Operator(a.desc_, a.matrix_ - b.matrix_);
}

Operator operator*(const Operator& a, double s) { return Operator(a.desc_, a.matrix_ * s); }

double max_abs_diff(const Operator& a, const Operator& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

// --- products -------------------------------------------------------------

Element identity(const AlgebraDescriptor& desc) {
  Vector v(desc.ambient_dim, 0.0);
  if (desc.kind == AlgebraKind::sym_real) {
    for (int i = 0; i < desc.rank; ++i) v[i] = 1.0;
  } else {
    v[0] = 1.0;
  }
  return Element(desc, std::move(v));
}

Element jordan_product(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const auto& desc = x.descriptor();
  if (desc.kind == AlgebraKind::lorentz) {
    const auto a = x.coords();
    const auto b = y.coords();
    Vector out(a.size());
    out[0] = dot(a, b);
    for (std::size_t i = 1; i < a.size(); ++i) out[i] = a[0] * b[i] + b[0] * a[i];
    return Element(desc, std::move(out));
  }
  const Matrix mx = detail::coords_to_matrix(x.coords(), desc.rank);
  const Matrix my = detail::coords_to_matrix(y.coords(), desc.rank);
  Matrix p = mx * my;
  p += my * mx;
  p *= 0.5;
  return Element(desc, detail::matrix_to_coords(p));
}

Element square(const Element& x) { return jordan_product(x, x); }

double inner(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return dot(x.coords(), y.coords());
}

double trace_inner(const Element& x, const Element& y) {
  const double d = inner(x, y);
  return x.descriptor().kind == AlgebraKind::lorentz ? 2.0 * d : d;
}

double trace_norm2(const Element& x) { return trace_inner(x, x); }

Operator lmap(const Element& x) {
  const auto& desc = x.descriptor();
  const int n = desc.ambient_dim;
  Matrix m(n, n);
  if (desc.kind == AlgebraKind::lorentz) {
    // Arrow matrix.
    const auto c = x.coords();
    for (int i = 0; i < n; ++i) m(i, i) = c[0];
    for (int i = 1; i < n; ++i) {
      m(0, i) = c[i];
      m(i, 0) = c[i];
    }
    return Operator(desc, std::move(m));
  }
  for (int k = 0; k < n; ++k) m.set_column(k, jordan_product(x, Element::basis(desc, k)).coords());
  return Operator(desc, std::move(m));
}

Operator quad_rep(const Element& x) {
  const Operator l = lmap(x);
  return 2.0 * (l * l) - lmap(square(x));
}

Operator box(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const Operator lx = lmap(x);
  const Operator ly = lmap(y);
  return lmap(jordan_product(x, y)) + lx * ly - ly * lx;
}

double det(const Element& x) {
  const auto& desc = x.descriptor();
  if (desc.kind == AlgebraKind::lorentz) {
    const auto c = x.coords();
    return c[0] * c[0] - dot(c.subspan(1), c.subspan(1));
  }
  return determinant(detail::coords_to_matrix(x.coords(), desc.rank));
}

double trace(const Element& x) {
  const auto& desc = x.descriptor();
  const auto c = x.coords();
  if (desc.kind == AlgebraKind::lorentz) return 2.0 * c[0];
  double t = 0.0;
  for (int i = 0; i < desc.rank; ++i) t += c[i];
  return t;
}

double min_eigenvalue(const Element& x) {
  if (x.descriptor().kind == AlgebraKind::lorentz) {
    const auto c = x.coords();
    return c[0] - norm2(c.subspan(1));
  }
  return spectral_decompose(x).eigenvalues.back();
}

namespace {

template <typename F>
Element spectral_map(const SpectralDecomposition& s, F&& f) {
  Element out = Element::zero(s.frame.descriptor());
  for (int i = 0; i < s.frame.rank(); ++i) out += f(s.eigenvalues[i]) * s.frame[i];
  return out;
}

void require_strictly_in_cone(const SpectralDecomposition& s, const Element& x, const char* what) {
  const double threshold = 1e-12 * std::max(trace(x), 0.0);
  if (s.eigenvalues.back() <= threshold || trace(x) <= 0.0)
    throw NotInCone(std::string(what) + ": element not strictly inside the cone (min eigenvalue " +
                    std::to_string(s.eigenvalues.back()) + ")");
}

}  // namespace

Element inverse(const Element& x) {
  const SpectralDecomposition s = spectral_decompose(x);
  double scale = 0.0;
  for (double l : s.eigenvalues) scale = std::max(scale, std::abs(l));
  for (double l : s.eigenvalues)
    if (std::abs(l) <= 1e-14 * scale || l == 0.0) throw SingularElement("inverse: zero eigenvalue");
  return spectral_map(s, [](double l) { return 1.0 / l; });
}

Element sqrt(const Element& x) {
  const SpectralDecomposition s = spectral_decompose(x);
  require_strictly_in_cone(s, x, "sqrt");
  return spectral_map(s, [](double l) { return std::sqrt(l); });
}

Element power(const Element& x, double t) {
  const SpectralDecomposition s = spectral_decompose(x);
  const bool integral = std::floor(t) == t;
  if (!integral) {
    require_strictly_in_cone(s, x, "power");
  } else if (t < 0) {
    double scale = 0.0;
    for (double l : s.eigenvalues) scale = std::max(scale, std::abs(l));
    for (double l : s.eigenvalues)
      if (std::abs(l) <= 1e-14 * scale || l == 0.0) throw SingularElement("power: zero eigenvalue");
  }
  return spectral_map(s, [t](double l) { return std::pow(l, t); });
}

bool is_in_cone(const Element& x, const Tolerance& tol) { return min_eigenvalue(x) > tol.abs; }

}  // namespace coneforge
