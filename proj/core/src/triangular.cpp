#include "coneforge/triangular.hpp"

#include <cmath>

#include "coneforge/errors.hpp"

namespace coneforge {

Operator frobenius(const Element& c, const Element& z, const Tolerance& tol) {
  require_same_algebra(c, z);
  if (!is_idempotent(c, tol)) throw InvalidInput("frobenius: c is not an idempotent");
  const double half_err = max_abs_diff(jordan_product(c, z), 0.5 * z);
  if (!tol.accepts(half_err, max_abs(z)))
    throw InvalidInput("frobenius: z is not in E(c, 1/2) (residual " + std::to_string(half_err) + ")");
  const Operator n = 2.0 * box(z, c);
  return Operator::identity(c.descriptor()) + n + 0.5 * (n * n);
}

Element TriangularDecomposition::reconstruct() const {
  Element y = Element::zero(frame.descriptor());
  for (int k = 0; k < frame.rank(); ++k) y += diag[k] * frame[k];
  for (int j = static_cast<int>(offdiag.size()) - 1; j >= 0; --j) y = frobenius(frame[j], offdiag[j]).apply(y);
  return y;
}

TriangularDecomposition triangular_decompose(const Element& x, const JordanFrame& frame,
                                             const Tolerance& tol) {
  validate_frame(frame, tol);
  require_same_algebra(x, frame[0]);
  const int r = frame.rank();
  const double tr = trace(x);
  if (!(tr > 0.0)) throw NotInCone("triangular_decompose: trace is not positive");
  const double threshold = 1e-12 * tr;

  TriangularDecomposition d{frame, {}, Vector(r)};
  Element rest = x;
  for (int j = 0; j < r; ++j) {
    const Element& c = frame[j];
    const PeirceProjectors p = peirce_projectors(c, tol);
    const double alpha = trace_inner(p.one.apply(rest), c);
    if (!(alpha > threshold))
      throw NotInCone("triangular_decompose: pivot " + std::to_string(j + 1) + " is " +
                      std::to_string(alpha));
    d.diag[j] = alpha;
    if (j == r - 1) break;
    Element z = p.half.apply(rest) * (1.0 / alpha);
    // tau_c(z)(alpha c + y) = alpha c + alpha z + alpha P0(z^2) + y for y in E(c, 0).
    rest = p.zero.apply(rest) - alpha * p.zero.apply(square(z));
    d.offdiag.push_back(std::move(z));
  }
  return d;
}

Operator t_operator(const TriangularDecomposition& d) {
  const AlgebraDescriptor& desc = d.frame.descriptor();
  Operator t = Operator::identity(desc);
  for (std::size_t j = 0; j < d.offdiag.size(); ++j) t = t * frobenius(d.frame[j], d.offdiag[j]);
  Element root = Element::zero(desc);
  for (int k = 0; k < d.frame.rank(); ++k) root += std::sqrt(d.diag[k]) * d.frame[k];
  return t * quad_rep(root);
}

Element t_apply(const TriangularDecomposition& d, const Element& y) { return t_operator(d).apply(y); }

double principal_minor(const Element& x, int k, const JordanFrame& frame) {
  if (k < 1 || k > frame.rank())
    throw IndexOutOfRange("principal_minor: order " + std::to_string(k) + " outside [1, " +
                          std::to_string(frame.rank()) + "]");
  require_same_algebra(x, frame[0]);
  const AlgebraDescriptor& desc = x.descriptor();
  Element p = Element::zero(desc);
  for (int i = 0; i < k; ++i) p += frame[i];
  // Padding the complement with its unit leaves the subalgebra determinant.
  return det(quad_rep(p).apply(x) + identity(desc) - p);
}

Vector principal_minors(const Element& x, const JordanFrame& frame) {
  Vector m(frame.rank());
  for (int k = 1; k <= frame.rank(); ++k) m[k - 1] = principal_minor(x, k, frame);
  return m;
}

namespace {

Vector checked_minors(const Element& x, const SVector& s, const JordanFrame& frame) {
  if (static_cast<int>(s.values.size()) != frame.rank())
    throw DimensionMismatch("delta_s: s must have length r");
  Vector m = principal_minors(x, frame);
  for (double v : m)
    if (!(v > 0.0)) throw NotInCone("delta_s: non-positive principal minor");
  return m;
}

}  // namespace

double delta_s(const Element& x, const SVector& s, const JordanFrame& frame) {
  const Vector m = checked_minors(x, s, frame);
  const int r = frame.rank();
  double v = 1.0;
  for (int k = 0; k < r; ++k) {
    const double exponent = s.values[k] - (k + 1 < r ? s.values[k + 1] : 0.0);
    if (exponent != 0.0) v *= std::pow(m[k], exponent);
  }
  return v;
}

double log_delta_s(const Element& x, const SVector& s, const JordanFrame& frame) {
  const Vector m = checked_minors(x, s, frame);
  const int r = frame.rank();
  double v = 0.0;
  for (int k = 0; k < r; ++k) {
    const double exponent = s.values[k] - (k + 1 < r ? s.values[k + 1] : 0.0);
    if (exponent != 0.0) v += exponent * std::log(m[k]);
  }
  return v;
}

}  // namespace coneforge
