#include "coneforge/peirce.hpp"

#include <cmath>

#include "coneforge/errors.hpp"
#include "coneforge/lorentz.hpp"
#include "coneforge/sym_real.hpp"

namespace coneforge {

void validate_frame(const JordanFrame& frame, const Tolerance& tol) {
  if (frame.idempotents.empty()) throw FrameIncomplete("frame is empty");
  const AlgebraDescriptor& desc = frame.descriptor();
  if (frame.rank() != desc.rank)
    throw FrameIncomplete("frame has " + std::to_string(frame.rank()) + " idempotents, rank is " +
                          std::to_string(desc.rank));
  Element sum = Element::zero(desc);
  for (const Element& c : frame.idempotents) {
    if (!(c.descriptor() == desc)) throw FrameIncomplete("frame mixes algebras");
    sum += c;
  }
  const double sum_err = max_abs_diff(sum, identity(desc));
  if (!tol.accepts(sum_err, 1.0))
    throw FrameIncomplete("frame does not sum to e (residual " + std::to_string(sum_err) + ")");
  for (int i = 0; i < frame.rank(); ++i) {
    if (!tol.close(trace(frame[i]), 1.0)) throw FrameIncomplete("frame idempotent is not primitive");
    for (int j = i; j < frame.rank(); ++j) {
      const Element p = jordan_product(frame[i], frame[j]);
      const double err = i == j ? max_abs_diff(p, frame[i]) : max_abs(p);
      if (!tol.accepts(err, 1.0))
        throw FrameIncomplete("frame idempotents not orthogonal (residual " + std::to_string(err) + ")");
    }
  }
}

JordanFrame standard_frame(const AlgebraDescriptor& desc) {
  if (desc.kind == AlgebraKind::lorentz) {
    Vector u(desc.size_parameter(), 0.0);
    u[0] = 1.0;
    return LorentzFrame(std::move(u)).jordan_frame();
  }
  JordanFrame frame;
  for (int i = 0; i < desc.rank; ++i) frame.idempotents.push_back(unit_element(desc.rank, i, i));
  return frame;
}

JordanFrame transform_frame(const Operator& k, const JordanFrame& frame) {
  JordanFrame out;
  for (const Element& c : frame.idempotents) out.idempotents.push_back(k.apply(c));
  return out;
}

Element SpectralDecomposition::reconstruct() const {
  Element x = Element::zero(frame.descriptor());
  for (int i = 0; i < frame.rank(); ++i) x += eigenvalues[i] * frame[i];
  return x;
}

SpectralDecomposition spectral_decompose(const Element& x) {
  if (x.descriptor().kind == AlgebraKind::lorentz) return lorentz_spectral(to_lorentz(x));
  SymEigen eig = eig_jacobi(to_sym_matrix(x));
  return SpectralDecomposition{frame_from_eigenvectors(eig.eigenvectors), std::move(eig.eigenvalues)};
}

bool is_idempotent(const Element& c, const Tolerance& tol) {
  return tol.accepts(max_abs_diff(square(c), c), max_abs(c));
}

bool is_primitive_idempotent(const Element& c, const Tolerance& tol) {
  return is_idempotent(c, tol) && tol.close(trace(c), 1.0);
}

PeirceProjectors peirce_projectors(const Element& c, const Tolerance& tol) {
  if (!is_idempotent(c, tol)) throw NotIdempotent("peirce_projectors: c^2 != c");
  const AlgebraDescriptor& desc = c.descriptor();
  const Operator l = lmap(c);
  const Operator l2 = l * l;
  const Operator id = Operator::identity(desc);
  return PeirceProjectors{
      2.0 * l2 - l,                    // 2t^2 - t
      4.0 * l - 4.0 * l2,              // 4t - 4t^2
      2.0 * l2 - 3.0 * l + id,         // 2t^2 - 3t + 1
  };
}

Operator joint_peirce_projector(const JordanFrame& frame, int i, int j) {
  if (i < 0 || j < 0 || i >= frame.rank() || j >= frame.rank() || i == j)
    throw IndexOutOfRange("joint_peirce_projector: need distinct indices in range");
  return 4.0 * (lmap(frame[i]) * lmap(frame[j]));
}

const Element& PeirceBlocks::block(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = blocks.find({i, j});
  if (it == blocks.end()) throw IndexOutOfRange("PeirceBlocks: no block (" + std::to_string(i) + "," +
                                                std::to_string(j) + ")");
  return it->second;
}

Element PeirceBlocks::sum() const {
  Element s = Element::zero(frame.descriptor());
  for (const auto& [key, value] : blocks) s += value;
  return s;
}

PeirceBlocks joint_peirce(const Element& x, const JordanFrame& frame, const Tolerance& tol) {
  validate_frame(frame, tol);
  require_same_algebra(x, frame[0]);
  PeirceBlocks out{frame, {}};
  const int r = frame.rank();
  for (int i = 0; i < r; ++i) {
    out.blocks.emplace(std::pair{i, i}, quad_rep(frame[i]).apply(x));
    for (int j = i + 1; j < r; ++j)
      out.blocks.emplace(std::pair{i, j}, joint_peirce_projector(frame, i, j).apply(x));
  }
  return out;
}

IdempotentSplit nonorthogonal_split(const Element& a, const Element& b, const Tolerance& tol) {
  require_same_algebra(a, b);
  if (!is_primitive_idempotent(a, tol) || !is_primitive_idempotent(b, tol))
    throw InvalidInput("nonorthogonal_split: inputs must be primitive idempotents");
  const double lambda2 = trace_inner(a, b);
  if (!(lambda2 > 1e-8 && lambda2 < 1.0 - 1e-8))
    throw InvalidInput("nonorthogonal_split: <a,b> = " + std::to_string(lambda2) +
                       " outside (1e-8, 1 - 1e-8)");
  const double mu2 = 1.0 - lambda2;
  const double lambda = std::sqrt(lambda2);
  const double mu = std::sqrt(mu2);
  const Element u = jordan_product(a, b);
  Element c = (b + lambda2 * a - 2.0 * u) * (1.0 / mu2);
  Element z = (u - lambda2 * a) * (2.0 / (lambda * mu));
  return IdempotentSplit{lambda, mu, std::move(c), std::move(z)};
}

}  // namespace coneforge
