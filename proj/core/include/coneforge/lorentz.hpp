#pragma once

#include <vector>

#include "coneforge/algebra.hpp"

namespace coneforge {

struct JordanFrame;
struct SpectralDecomposition;

/// (x0, x) in R x R^n.
struct LorentzElement {
  double x0 = 0.0;
  Vector x;

  int n() const noexcept { return static_cast<int>(x.size()); }
};

Element to_element(const LorentzElement& v);
LorentzElement to_lorentz(const Element& e);

double lorentz_det(const LorentzElement& v);

/// Unit vector u defining the frame (c_u, c_u^perp), c_u = (1, u)/2.
struct LorentzFrame {
  Vector u;

  explicit LorentzFrame(Vector unit);

  Element idempotent() const;
  Element complement() const;
  JordanFrame jordan_frame() const;
};

/// P(x^{1/2}) y in closed form.
LorentzElement lorentz_quad_sqrt_apply(const LorentzElement& x, const LorentzElement& y);

/// Eigenvalues x0 +- |x| with u = x/|x|; u = e_1 when x = 0.
SpectralDecomposition lorentz_spectral(const LorentzElement& x);

/// Orthonormal basis of E(c_u, 1/2) = {(0, z) : <z, u> = 0}, n - 1 vectors.
std::vector<Element> lorentz_half_space(const Vector& u);

struct LorentzTriangularParams {
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  LorentzElement z;
};

/// The unique alpha1, alpha2 > 0 and z in E(c_u, 1/2) with
/// tau_{c_u}(z) P(alpha1 c_u + alpha2 c_u^perp) e = y.
LorentzTriangularParams lorentz_triangular_params(const LorentzElement& y, const Vector& u);

/// Delta_1 with respect to (c_u, c_u^perp): x0 + <x, u>.
double lorentz_delta1(const LorentzElement& x, const Vector& u);

/// t_y x in closed form, where t_y is the triangular group element with
/// t_y e = y for the frame induced by u.
LorentzElement lorentz_t_apply(const LorentzElement& y, const LorentzElement& x, const Vector& u);

}  // namespace coneforge
