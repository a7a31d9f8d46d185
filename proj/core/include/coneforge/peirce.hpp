#pragma once

#include <map>
#include <utility>
#include <vector>

#include "coneforge/algebra.hpp"

namespace coneforge {

/// Complete system of primitive orthogonal idempotents.
struct JordanFrame {
  std::vector<Element> idempotents;

  int rank() const noexcept { return static_cast<int>(idempotents.size()); }
  const AlgebraDescriptor& descriptor() const { return idempotents.front().descriptor(); }
  const Element& operator[](std::size_t i) const { return idempotents[i]; }
};

/// Throws FrameIncomplete unless sum c_i = e, c_i c_j = delta_ij c_i and
/// tr c_i = 1, all within tol.
void validate_frame(const JordanFrame& frame, const Tolerance& tol = {});

/// Diagonal matrix units for sym_real; (c_u, c_u^perp) with u = e_1 for lorentz.
JordanFrame standard_frame(const AlgebraDescriptor& desc);

/// Image of a frame under an algebra automorphism.
JordanFrame transform_frame(const Operator& k, const JordanFrame& frame);

struct SpectralDecomposition {
  JordanFrame frame;
  Vector eigenvalues;  // descending

  Element reconstruct() const;
};

SpectralDecomposition spectral_decompose(const Element& x);

bool is_idempotent(const Element& c, const Tolerance& tol = {});
bool is_primitive_idempotent(const Element& c, const Tolerance& tol = {});

struct PeirceProjectors {
  Operator one;
  Operator half;
  Operator zero;
};

/// Projectors onto E(c,1), E(c,1/2), E(c,0) as Lagrange polynomials in L(c).
PeirceProjectors peirce_projectors(const Element& c, const Tolerance& tol = {});

/// Orthogonal projector onto E_ij (i != j): 4 L(c_i) L(c_j). Zero-based.
Operator joint_peirce_projector(const JordanFrame& frame, int i, int j);

/// Components of x in E_ij, i <= j, keyed by zero-based (i, j).
struct PeirceBlocks {
  JordanFrame frame;
  std::map<std::pair<int, int>, Element> blocks;

  const Element& block(int i, int j) const;
  Element sum() const;
};

PeirceBlocks joint_peirce(const Element& x, const JordanFrame& frame, const Tolerance& tol = {});

/// b = lambda^2 a + mu^2 c + lambda mu z with c orthogonal to a and
/// z in E(a,1/2) and E(c,1/2), |z|^2 = 2 (trace norm).
struct IdempotentSplit {
  double lambda = 0.0;
  double mu = 0.0;
  Element c;
  Element z;
};

IdempotentSplit nonorthogonal_split(const Element& a, const Element& b, const Tolerance& tol = {});

}  // namespace coneforge
