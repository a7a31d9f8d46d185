#include "coneforge/lorentz.hpp"

#include <cmath>

#include "coneforge/errors.hpp"
#include "coneforge/peirce.hpp"

namespace coneforge {

namespace {

void require_cone(const LorentzElement& v, const char* what) {
  if (!(v.x0 > norm2(v.x))) throw NotInCone(std::string(what) + ": requires x0 > |x|");
}

void require_same_n(const LorentzElement& a, const LorentzElement& b) {
  if (a.x.size() != b.x.size()) throw DimensionMismatch("lorentz: dimension mismatch");
}

void require_unit(const Vector& u) {
  if (u.size() < 2) throw InvalidInput("lorentz: n must be at least 2");
  if (std::abs(norm2(u) - 1.0) > 1e-10) throw InvalidInput("lorentz: u must be a unit vector");
}

}  // namespace

Element to_element(const LorentzElement& v) {
  Vector coords;
  coords.reserve(v.x.size() + 1);
  coords.push_back(v.x0);
  coords.insert(coords.end(), v.x.begin(), v.x.end());
  return Element(AlgebraDescriptor::lorentz(v.n()), std::move(coords));
}

LorentzElement to_lorentz(const Element& e) {
  if (e.descriptor().kind != AlgebraKind::lorentz)
    throw DimensionMismatch("to_lorentz: element is not in a Lorentz algebra");
  const auto c = e.coords();
  return {c[0], Vector(c.begin() + 1, c.end())};
}

double lorentz_det(const LorentzElement& v) { return v.x0 * v.x0 - dot(v.x, v.x); }

LorentzFrame::LorentzFrame(Vector unit) : u(std::move(unit)) {
  require_unit(u);
  const double n = norm2(u);
  for (double& v : u) v /= n;
}

Element LorentzFrame::idempotent() const {
  LorentzElement c{0.5, u};
  for (double& v : c.x) v *= 0.5;
  return to_element(c);
}

Element LorentzFrame::complement() const {
  LorentzElement c{0.5, u};
  for (double& v : c.x) v *= -0.5;
  return to_element(c);
}

JordanFrame LorentzFrame::jordan_frame() const { return JordanFrame{{idempotent(), complement()}}; }

LorentzElement lorentz_quad_sqrt_apply(const LorentzElement& x, const LorentzElement& y) {
  require_same_n(x, y);
  require_cone(x, "lorentz_quad_sqrt_apply");
  const double sd = std::sqrt(lorentz_det(x));
  const double xy = dot(x.x, y.x);
  const double coef = y.x0 + xy / (x.x0 + sd);
  LorentzElement out{x.x0 * y.x0 + xy, Vector(y.x.size())};
  for (std::size_t i = 0; i < y.x.size(); ++i) out.x[i] = sd * y.x[i] + coef * x.x[i];
  return out;
}

SpectralDecomposition lorentz_spectral(const LorentzElement& x) {
  const double nx = norm2(x.x);
  Vector u(x.x.size(), 0.0);
  if (nx > 0.0) {
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = x.x[i] / nx;
  } else {
    u[0] = 1.0;
  }
  return SpectralDecomposition{LorentzFrame(std::move(u)).jordan_frame(), {x.x0 + nx, x.x0 - nx}};
}

std::vector<Element> lorentz_half_space(const Vector& u) {
  require_unit(u);
  const std::size_t n = u.size();
  // Householder reflection H with H e_1 parallel to u; its remaining columns
  // span the orthogonal complement of u.
  Vector w = u;
  w[0] += (u[0] >= 0 ? 1.0 : -1.0) * norm2(u);
  const double ww = dot(w, w);
  const AlgebraDescriptor desc = AlgebraDescriptor::lorentz(static_cast<int>(n));
  std::vector<Element> basis;
  basis.reserve(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    Vector coords(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) coords[i + 1] = (i == k ? 1.0 : 0.0) - 2.0 * w[i] * w[k] / ww;
    basis.emplace_back(desc, std::move(coords));
  }
  return basis;
}

double lorentz_delta1(const LorentzElement& x, const Vector& u) { return x.x0 + dot(x.x, u); }

LorentzTriangularParams lorentz_triangular_params(const LorentzElement& y, const Vector& u) {
  require_unit(u);
  if (y.x.size() != u.size()) throw DimensionMismatch("lorentz_triangular_params: u has wrong length");
  require_cone(y, "lorentz_triangular_params");
  const double yu = dot(y.x, u);
  const double d1 = y.x0 + yu;
  LorentzTriangularParams p;
  p.alpha1 = std::sqrt(d1);
  p.alpha2 = std::sqrt(lorentz_det(y) / d1);
  p.z = LorentzElement{0.0, Vector(u.size())};
  for (std::size_t i = 0; i < u.size(); ++i) p.z.x[i] = (y.x[i] - yu * u[i]) / d1;
  return p;
}

LorentzElement lorentz_t_apply(const LorentzElement& y, const LorentzElement& x, const Vector& u) {
  require_same_n(x, y);
  require_unit(u);
  if (y.x.size() != u.size()) throw DimensionMismatch("lorentz_t_apply: u has wrong length");
  require_cone(y, "lorentz_t_apply");
  const double det_y = lorentz_det(y);
  const double sd = std::sqrt(det_y);
  const double xu = dot(x.x, u);
  const double yu = dot(y.x, u);
  const double d1x = x.x0 + xu;
  const double d1y = y.x0 + yu;
  const double h = (2.0 * sd / d1y) * (dot(x.x, y.x) - xu * yu) + (sd - 2.0 * det_y / d1y) * xu -
                   sd * x.x0;

  // sqrt(det y) x + Delta_1(x) y - sqrt(det y) Delta_1(x) c_u + h c_u^perp
  const double c_coef = -sd * d1x;
  LorentzElement out{sd * x.x0 + d1x * y.x0 + 0.5 * (c_coef + h), Vector(u.size())};
  for (std::size_t i = 0; i < u.size(); ++i)
    out.x[i] = sd * x.x[i] + d1x * y.x[i] + 0.5 * (c_coef - h) * u[i];
  return out;
}

}  // namespace coneforge
