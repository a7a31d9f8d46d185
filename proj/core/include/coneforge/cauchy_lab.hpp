#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "coneforge/algebra.hpp"
#include "coneforge/peirce.hpp"
#include "coneforge/triangular.hpp"

namespace coneforge {

enum class MultiplicationAlgorithm { w1, w2 };

enum class Law { w1, w2, pexider, character, det_mult, k_invariance };

const char* to_string(Law law) noexcept;
const char* to_string(MultiplicationAlgorithm w) noexcept;

/// Independent random stream for sample `index` under `seed`. Reports built
/// from these streams do not depend on evaluation order.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0);

  double normal();
  double uniform(double lo, double hi);
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Standard-normal coordinates.
Element sample_element(const AlgebraDescriptor& desc, SampleStream& rng);
/// v^2 + eps e with eps = 0.1 tr(v^2) / r.
Element sample_cone(const AlgebraDescriptor& desc, SampleStream& rng);

/// Random element of E_ij for the frame (zero-based i != j).
Element sample_peirce_block(const JordanFrame& frame, int i, int j, SampleStream& rng);
/// Random triangular group parameters for the frame.
TriangularDecomposition sample_triangular(const JordanFrame& frame, SampleStream& rng);

/// Haar-distributed element of K: x -> Q x Q^T (sym_real) or
/// (x0, x) -> (x0, R x) (lorentz) with Q, R special orthogonal.
Operator random_k_automorphism(const AlgebraDescriptor& desc, std::uint64_t seed);
Operator random_k_automorphism(const AlgebraDescriptor& desc, SampleStream& rng);

/// P(x^{1/2}) y
Element w1_apply(const Element& x, const Element& y);
/// t_x y with t_x the triangular group element of x for frame.
Element w2_apply(const Element& x, const Element& y, const JordanFrame& frame);
Element w_apply(MultiplicationAlgorithm w, const Element& x, const Element& y,
                const JordanFrame& frame);
Operator w_operator(MultiplicationAlgorithm w, const Element& x, const JordanFrame& frame);

/// Regular solutions: f = s log det, or f = sum_k s_k log Delta_k for a frame.
struct LogFamily {
  enum class Kind { log_det, log_minors };

  Kind kind = Kind::log_det;
  Vector s;
  std::optional<JordanFrame> frame;

  static LogFamily log_det(double s = 1.0);
  static LogFamily log_minors(Vector s, JordanFrame frame);

  double operator()(const Element& x) const;
};

struct ResidualReport {
  Law law = Law::w1;
  int samples = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  std::uint64_t seed = 0;
  bool pass = true;

  /// Records one comparison; pass stays true only if every one is within tol.
  void record(double lhs, double rhs, const Tolerance& tol);
  /// Records a residual measured against a reference magnitude.
  void record_residual(double residual, double scale, const Tolerance& tol);
};

struct SamplingPlan {
  AlgebraDescriptor desc;
  JordanFrame frame;  // triangular frame for w2
  int samples = 1000;
  std::uint64_t seed = 42;
  Tolerance tol;

  static SamplingPlan standard(const AlgebraDescriptor& desc, int samples, std::uint64_t seed,
                               const Tolerance& tol = {});
};

/// max |f(x) + f(w(e) y) - f(w(x) y)| over random cone pairs.
ResidualReport check_cauchy(MultiplicationAlgorithm w, const LogFamily& f, const SamplingPlan& plan);

/// det(w(y) x) against det(y) det(x), relative.
ResidualReport det_multiplicativity(MultiplicationAlgorithm w, const SamplingPlan& plan);

/// Coordinates of the witness pair on span{a, c, z}.
struct WitnessCoordinates {
  double x1, x2, x3;
  double y1, y2, y3;
};

/// Upper end of the admissible interval for alpha: lambda^8 / (1 + lambda^2)^2.
double witness_alpha_upper(double lambda2);

/// Coordinates for given lambda^2 and alpha, oriented so that x1 + x2 > 0.
/// Throws InvalidInput when the normalizing constant is singular.
WitnessCoordinates witness_coordinates(double lambda2, double alpha);

struct WitnessPair {
  double lambda2 = 0.0;
  double alpha = 0.0;
  Element x;
  Element y;
  Element b;
  double residual_a = 0.0;  // max |P(x) y^2 - (alpha a + a^perp)|
  double residual_b = 0.0;  // max |P(y) x^2 - (alpha b + b^perp)|
};

/// Builds x, y, b and the two residuals without checking the alpha interval.
WitnessPair build_witness_pair(const Element& a, const Element& c, const Element& z,
                               double lambda2, double alpha);

/// Checked construction: validates a, c, z, lambda^2 and alpha, then
/// requires x, y in the cone and both residuals within tol.
WitnessPair detwth_witness(const Element& a, const Element& c, const Element& z, double lambda2,
                           double alpha, const Tolerance& tol = {1e-8, 1e-9});

using ConeFunction = std::function<double(const Element&)>;

struct PexiderResult {
  double a0 = 0.0;
  double b0 = 0.0;
  ConeFunction f;
  ResidualReport report;
};

/// Recovers a0 = c(e) - b(e), b0 = b(e), f = c - a0 - b0 from a triple solving
/// a(x) + b(y) = c(w(x) y) and verifies the decomposition on samples.
PexiderResult pexider_analyze(const ConeFunction& a, const ConeFunction& b, const ConeFunction& c,
                              MultiplicationAlgorithm w, const SamplingPlan& plan);
/// As pexider_analyze, throwing ToleranceExceeded on an inconsistent triple.
PexiderResult pexider_reduce(const ConeFunction& a, const ConeFunction& b, const ConeFunction& c,
                             MultiplicationAlgorithm w, const SamplingPlan& plan);

/// h(t) = prod_k Delta_k(t e)^{s_k}.
double triangular_character(const TriangularDecomposition& d, const SVector& s);
double triangular_character(const Operator& t, const JordanFrame& frame, const SVector& s);

/// h(s t) against h(s) h(t) on random triangular pairs, relative.
ResidualReport check_character_multiplicativity(const SVector& s, const SamplingPlan& plan);

/// k_x = P(x^{1/2})^{-1} t_x.
Operator polar_k_factor(const Element& x, const JordanFrame& frame);

/// Polar reduction of the w2 equation to the w1 equation for f = log det:
/// k_x fixes e and is orthogonal, f is K-invariant, and f solves both
/// equations.
ResidualReport k_invariance_reduction_check(const SamplingPlan& plan);

}  // namespace coneforge
