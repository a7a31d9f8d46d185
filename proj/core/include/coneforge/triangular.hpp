#pragma once

#include <vector>

#include "coneforge/algebra.hpp"
#include "coneforge/peirce.hpp"

namespace coneforge {

/// tau_c(z) = I + 2 z box c + (2 z box c)^2 / 2 for z in E(c, 1/2).
Operator frobenius(const Element& c, const Element& z, const Tolerance& tol = {});

/// x = tau_{c_1}(z^(1)) ... tau_{c_{r-1}}(z^(r-1)) (sum_k alpha_k c_k)
/// with z^(j) in the sum of E_jk over k > j and alpha_k > 0.
struct TriangularDecomposition {
  JordanFrame frame;
  std::vector<Element> offdiag;  // r - 1 entries
  Vector diag;                   // alpha, r entries

  Element reconstruct() const;
};

TriangularDecomposition triangular_decompose(const Element& x, const JordanFrame& frame,
                                             const Tolerance& tol = {});

/// The triangular group element t with t e = reconstruct():
/// tau_{c_1}(z^(1)) ... tau_{c_{r-1}}(z^(r-1)) P(sum_k sqrt(alpha_k) c_k).
Operator t_operator(const TriangularDecomposition& d);
Element t_apply(const TriangularDecomposition& d, const Element& y);

/// Delta_k(x) for 1 <= k <= r with respect to frame.
double principal_minor(const Element& x, int k, const JordanFrame& frame);
Vector principal_minors(const Element& x, const JordanFrame& frame);

struct SVector {
  Vector values;
};

/// Delta_1^{s_1 - s_2} ... Delta_r^{s_r}.
double delta_s(const Element& x, const SVector& s, const JordanFrame& frame);
double log_delta_s(const Element& x, const SVector& s, const JordanFrame& frame);

}  // namespace coneforge
