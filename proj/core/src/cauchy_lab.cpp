#include "coneforge/cauchy_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coneforge/errors.hpp"
#include "coneforge/sym_real.hpp"
#include "internal.hpp"

namespace coneforge {

const char* to_string(Law law) noexcept {
  switch (law) {
    case Law::w1: return "w1";
    case Law::w2: return "w2";
    case Law::pexider: return "pexider";
    case Law::character: return "character";
    case Law::det_mult: return "det_mult";
    case Law::k_invariance: return "k_invariance";
  }
  return "unknown";
}

const char* to_string(MultiplicationAlgorithm w) noexcept {
  return w == MultiplicationAlgorithm::w1 ? "w1" : "w2";
}

// --- sampling -------------------------------------------------------------

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t index, std::uint64_t salt) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  return std::seed_seq{lo(seed), hi(seed), lo(index), hi(index), lo(salt), hi(salt)};
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index, std::uint64_t salt) {
  std::seed_seq seq = make_seed_seq(seed, index, salt);
  engine_.seed(seq);
}

double SampleStream::normal() { return normal_(engine_); }

double SampleStream::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

Element sample_element(const AlgebraDescriptor& desc, SampleStream& rng) {
  Vector v(desc.ambient_dim);
  for (double& c : v) c = rng.normal();
  return Element(desc, std::move(v));
}

Element sample_cone(const AlgebraDescriptor& desc, SampleStream& rng) {
  const Element v2 = square(sample_element(desc, rng));
  const double eps = 0.1 * trace(v2) / desc.rank;
  return v2 + eps * identity(desc);
}

Element sample_peirce_block(const JordanFrame& frame, int i, int j, SampleStream& rng) {
  return joint_peirce_projector(frame, i, j).apply(sample_element(frame.descriptor(), rng));
}

TriangularDecomposition sample_triangular(const JordanFrame& frame, SampleStream& rng) {
  const int r = frame.rank();
  TriangularDecomposition d{frame, {}, Vector(r)};
  for (int k = 0; k < r; ++k) d.diag[k] = std::exp(0.5 * rng.normal());
  for (int j = 0; j + 1 < r; ++j) {
    Element z = Element::zero(frame.descriptor());
    for (int k = j + 1; k < r; ++k) z += 0.5 * sample_peirce_block(frame, j, k, rng);
    d.offdiag.push_back(std::move(z));
  }
  return d;
}

namespace {

// Haar measure on SO(n): Gram-Schmidt of a Gaussian matrix with column signs
// fixed by the diagonal of R, then one column flipped if det < 0.
Matrix haar_special_orthogonal(int n, SampleStream& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  Matrix q(n, n);
  for (int j = 0; j < n; ++j) {
    Vector v = g.column(j);
    for (int k = 0; k < j; ++k) {
      const Vector qk = q.column(k);
      const double p = dot(qk, v);
      for (int i = 0; i < n; ++i) v[i] -= p * qk[i];
    }
    const double nv = norm2(v);
    // Sign of R_jj is +1 by construction since nv > 0.
    for (double& c : v) c /= nv;
    q.set_column(j, v);
  }
  if (determinant(q) < 0) {
    for (int i = 0; i < n; ++i) q(i, 0) = -q(i, 0);
  }
  return q;
}

}  // namespace

Operator random_k_automorphism(const AlgebraDescriptor& desc, SampleStream& rng) {
  const int n = desc.ambient_dim;
  Matrix m(n, n);
  if (desc.kind == AlgebraKind::lorentz) {
    const int dim = desc.size_parameter();
    const Matrix rot = haar_special_orthogonal(dim, rng);
    m(0, 0) = 1.0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i + 1, j + 1) = rot(i, j);
    return Operator(desc, std::move(m));
  }
  const int r = desc.rank;
  const Matrix q = haar_special_orthogonal(r, rng);
  const Matrix qt = q.transpose();
  for (int k = 0; k < n; ++k) {
    const Element b = Element::basis(desc, k);
    const Matrix image = q * detail::coords_to_matrix(b.coords(), r) * qt;
    m.set_column(k, detail::matrix_to_coords(image));
  }
  return Operator(desc, std::move(m));
}

Operator random_k_automorphism(const AlgebraDescriptor& desc, std::uint64_t seed) {
  SampleStream rng(seed, 0, 0x6b);
  return random_k_automorphism(desc, rng);
}

// --- multiplication algorithms --------------------------------------------

Element w1_apply(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return quad_rep(sqrt(x)).apply(y);
}

Element w2_apply(const Element& x, const Element& y, const JordanFrame& frame) {
  require_same_algebra(x, y);
  return t_apply(triangular_decompose(x, frame), y);
}

Element w_apply(MultiplicationAlgorithm w, const Element& x, const Element& y, const JordanFrame& frame) {
  return w == MultiplicationAlgorithm::w1 ? w1_apply(x, y) : w2_apply(x, y, frame);
}

Operator w_operator(MultiplicationAlgorithm w, const Element& x, const JordanFrame& frame) {
  return w == MultiplicationAlgorithm::w1 ? quad_rep(sqrt(x)) : t_operator(triangular_decompose(x, frame));
}

// --- log families and reports ---------------------------------------------

LogFamily LogFamily::log_det(double s) { return LogFamily{Kind::log_det, {s}, std::nullopt}; }

LogFamily LogFamily::log_minors(Vector s, JordanFrame frame) {
  if (static_cast<int>(s.size()) != frame.rank())
    throw DimensionMismatch("LogFamily: s must have one exponent per frame idempotent");
  return LogFamily{Kind::log_minors, std::move(s), std::move(frame)};
}

double LogFamily::operator()(const Element& x) const {
  if (kind == Kind::log_det) {
    const double d = det(x);
    if (!(d > 0.0)) throw NotInCone("LogFamily: det <= 0");
    return s[0] * std::log(d);
  }
  const Vector m = principal_minors(x, *frame);
  double v = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!(m[k] > 0.0)) throw NotInCone("LogFamily: principal minor <= 0");
    v += s[k] * std::log(m[k]);
  }
  return v;
}

void ResidualReport::record(double lhs, double rhs, const Tolerance& tol) {
  const double abs_res = std::abs(lhs - rhs);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  const double rel_res = scale > 0.0 ? abs_res / scale : 0.0;
  max_abs_residual = std::max(max_abs_residual, abs_res);
  max_rel_residual = std::max(max_rel_residual, rel_res);
  if (!tol.close(lhs, rhs) || !std::isfinite(abs_res)) pass = false;
}

void ResidualReport::record_residual(double residual, double scale, const Tolerance& tol) {
  const double s = std::abs(scale);
  max_abs_residual = std::max(max_abs_residual, residual);
  max_rel_residual = std::max(max_rel_residual, s > 0.0 ? residual / s : residual);
  if (!tol.accepts(residual, s) || !std::isfinite(residual)) pass = false;
}

SamplingPlan SamplingPlan::standard(const AlgebraDescriptor& desc, int samples, std::uint64_t seed,
                                    const Tolerance& tol) {
  if (samples < 1) throw InvalidInput("SamplingPlan: samples must be at least 1");
  return SamplingPlan{desc, standard_frame(desc), samples, seed, tol};
}

namespace {

ResidualReport start_report(Law law, const SamplingPlan& plan) {
  ResidualReport r;
  r.law = law;
  r.samples = plan.samples;
  r.seed = plan.seed;
  return r;
}

}  // namespace

ResidualReport check_cauchy(MultiplicationAlgorithm w, const LogFamily& f, const SamplingPlan& plan) {
  const Law law = w == MultiplicationAlgorithm::w1 ? Law::w1 : Law::w2;
  ResidualReport report = start_report(law, plan);
  const Element e = identity(plan.desc);
  for (int i = 0; i < plan.samples; ++i) {
    SampleStream rng(plan.seed, i, static_cast<std::uint64_t>(law));
    const Element x = sample_cone(plan.desc, rng);
    const Element y = sample_cone(plan.desc, rng);
    const double lhs = f(x) + f(w_apply(w, e, y, plan.frame));
    const double rhs = f(w_apply(w, x, y, plan.frame));
    report.record(lhs, rhs, plan.tol);
  }
  return report;
}

ResidualReport det_multiplicativity(MultiplicationAlgorithm w, const SamplingPlan& plan) {
  ResidualReport report = start_report(Law::det_mult, plan);
  for (int i = 0; i < plan.samples; ++i) {
    SampleStream rng(plan.seed, i, 100 + static_cast<std::uint64_t>(w));
    const Element x = sample_cone(plan.desc, rng);
    const Element y = sample_cone(plan.desc, rng);
    report.record(det(w_apply(w, y, x, plan.frame)), det(y) * det(x), plan.tol);
  }
  return report;
}

// --- witness pair ---------------------------------------------------------

double witness_alpha_upper(double lambda2) {
  const double l8 = lambda2 * lambda2 * lambda2 * lambda2;
  return l8 / ((1.0 + lambda2) * (1.0 + lambda2));
}

WitnessCoordinates witness_coordinates(double lambda2, double alpha) {
  if (!(lambda2 > 0.0 && lambda2 < 1.0)) throw InvalidInput("witness: lambda^2 must lie in (0, 1)");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw InvalidInput("witness: alpha must lie in [0, 1)");
  const double l = std::sqrt(lambda2);
  const double l3 = lambda2 * l;
  const double l4 = lambda2 * lambda2;
  const double mu2 = 1.0 - lambda2;
  const double mu = std::sqrt(mu2);
  const double sa = std::sqrt(alpha);
  const double lm2 = lambda2 * mu2;

  const double denom = alpha * (1.0 - l4) + 2.0 * sa * lambda2 - l4 * (1.0 - mu2 * mu2);
  if (std::abs(denom) <= 1e-12) throw InvalidInput("witness: normalizing constant is singular");
  const double big_c = (1.0 - sa) * l3 * (1.0 + lm2) / denom;

  WitnessCoordinates w{};
  w.x1 = big_c * sa * mu2 * (lambda2 + sa * (1.0 + lambda2) * mu2) / (1.0 + lm2);
  w.x2 = big_c * ((1.0 - sa) / (1.0 + lm2) - mu2);
  w.x3 = big_c * sa * l * mu;
  // P(x) and x^2 are invariant under x -> -x on span{a, c, z}; pick the
  // orientation with x1 + x2 > 0 so x can lie in the cone.
  if (w.x1 + w.x2 < 0.0) {
    w.x1 = -w.x1;
    w.x2 = -w.x2;
    w.x3 = -w.x3;
  }
  w.y1 = 1.0 / lm2;
  w.y2 = 1.0;
  w.y3 = -(sa + lm2) / ((1.0 - sa) * l3 * mu);
  return w;
}

WitnessPair build_witness_pair(const Element& a, const Element& c, const Element& z, double lambda2,
                               double alpha) {
  require_same_algebra(a, c);
  require_same_algebra(a, z);
  const WitnessCoordinates w = witness_coordinates(lambda2, alpha);
  const AlgebraDescriptor& desc = a.descriptor();
  const Element e = identity(desc);
  const Element rest = e - a - c;
  const double lm = std::sqrt(lambda2 * (1.0 - lambda2));

  Element x = w.x1 * a + w.x2 * c + w.x3 * z + rest;
  Element y = w.y1 * a + w.y2 * c + w.y3 * z + rest;
  Element b = lambda2 * a + (1.0 - lambda2) * c + lm * z;

  const Element target_a = alpha * a + (e - a);
  const Element target_b = alpha * b + (e - b);
  const double res_a = max_abs_diff(quad_rep(x).apply(square(y)), target_a);
  const double res_b = max_abs_diff(quad_rep(y).apply(square(x)), target_b);
  return WitnessPair{lambda2, alpha, std::move(x), std::move(y), std::move(b), res_a, res_b};
}

WitnessPair detwth_witness(const Element& a, const Element& c, const Element& z, double lambda2,
                           double alpha, const Tolerance& tol) {
  require_same_algebra(a, c);
  require_same_algebra(a, z);
  const Tolerance structural{};
  if (!is_primitive_idempotent(a, structural) || !is_primitive_idempotent(c, structural))
    throw InvalidInput("witness: a and c must be primitive idempotents");
  if (!structural.accepts(max_abs(jordan_product(a, c)), 1.0))
    throw InvalidInput("witness: a and c must be orthogonal");
  const double za = max_abs_diff(jordan_product(a, z), 0.5 * z);
  const double zc = max_abs_diff(jordan_product(c, z), 0.5 * z);
  if (!structural.accepts(std::max(za, zc), max_abs(z)))
    throw InvalidInput("witness: z must lie in E(a,1/2) and E(c,1/2)");
  if (!structural.close(trace_norm2(z), 2.0)) throw InvalidInput("witness: |z|^2 must equal 2");
  if (!(lambda2 > 0.0 && lambda2 < 1.0)) throw InvalidInput("witness: lambda^2 must lie in (0, 1)");
  const double upper = witness_alpha_upper(lambda2);
  if (!(alpha > 0.0 && alpha < upper))
    throw InvalidInput("witness: alpha must lie in the open interval (0, " + std::to_string(upper) + ")");

  WitnessPair pair = build_witness_pair(a, c, z, lambda2, alpha);
  if (!is_in_cone(pair.x, Tolerance{0.0, 0.0}) || !is_in_cone(pair.y, Tolerance{0.0, 0.0}))
    throw ToleranceExceeded("witness: x or y left the cone");
  if (!tol.accepts(pair.residual_a, 1.0) || !tol.accepts(pair.residual_b, 1.0))
    throw ToleranceExceeded("witness: residuals " + std::to_string(pair.residual_a) + ", " +
                            std::to_string(pair.residual_b) + " exceed tolerance");
  return pair;
}

// --- Pexider --------------------------------------------------------------

PexiderResult pexider_analyze(const ConeFunction& a, const ConeFunction& b, const ConeFunction& c,
                              MultiplicationAlgorithm w, const SamplingPlan& plan) {
  const Element e = identity(plan.desc);
  const double b0 = b(e);
  const double a0 = c(e) - b0;
  ConeFunction f = [c, a0, b0](const Element& x) { return c(x) - a0 - b0; };

  ResidualReport report = start_report(Law::pexider, plan);
  for (int i = 0; i < plan.samples; ++i) {
    SampleStream rng(plan.seed, i, static_cast<std::uint64_t>(Law::pexider));
    const Element x = sample_cone(plan.desc, rng);
    const Element y = sample_cone(plan.desc, rng);
    const Element wey = w_apply(w, e, y, plan.frame);
    const Element wxy = w_apply(w, x, y, plan.frame);
    report.record(a(x), f(x) + a0, plan.tol);
    report.record(b(y), f(wey) + b0, plan.tol);
    report.record(f(x) + f(wey), f(wxy), plan.tol);
  }
  return PexiderResult{a0, b0, std::move(f), report};
}

PexiderResult pexider_reduce(const ConeFunction& a, const ConeFunction& b, const ConeFunction& c,
                             MultiplicationAlgorithm w, const SamplingPlan& plan) {
  PexiderResult result = pexider_analyze(a, b, c, w, plan);
  if (!result.report.pass)
    throw ToleranceExceeded("pexider_reduce: triple is inconsistent (max residual " +
                            std::to_string(result.report.max_abs_residual) + ")");
  return result;
}

// --- characters and K-invariance ------------------------------------------

double triangular_character(const Operator& t, const JordanFrame& frame, const SVector& s) {
  if (static_cast<int>(s.values.size()) != frame.rank())
    throw DimensionMismatch("triangular_character: s must have length r");
  const Vector m = principal_minors(t.apply(identity(frame.descriptor())), frame);
  double log_h = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!(m[k] > 0.0)) throw NotInCone("triangular_character: t e is not in the cone");
    log_h += s.values[k] * std::log(m[k]);
  }
  return std::exp(log_h);
}

double triangular_character(const TriangularDecomposition& d, const SVector& s) {
  return triangular_character(t_operator(d), d.frame, s);
}

ResidualReport check_character_multiplicativity(const SVector& s, const SamplingPlan& plan) {
  ResidualReport report = start_report(Law::character, plan);
  for (int i = 0; i < plan.samples; ++i) {
    SampleStream rng(plan.seed, i, static_cast<std::uint64_t>(Law::character));
    const Operator t1 = t_operator(sample_triangular(plan.frame, rng));
    const Operator t2 = t_operator(sample_triangular(plan.frame, rng));
    const double h1 = triangular_character(t1, plan.frame, s);
    const double h2 = triangular_character(t2, plan.frame, s);
    report.record(triangular_character(t1 * t2, plan.frame, s), h1 * h2, plan.tol);
  }
  return report;
}

Operator polar_k_factor(const Element& x, const JordanFrame& frame) {
  return quad_rep(power(x, -0.5)) * t_operator(triangular_decompose(x, frame));
}

ResidualReport k_invariance_reduction_check(const SamplingPlan& plan) {
  ResidualReport report = start_report(Law::k_invariance, plan);
  const AlgebraDescriptor& desc = plan.desc;
  const Element e = identity(desc);
  const Operator id = Operator::identity(desc);
  const LogFamily f = LogFamily::log_det();
  for (int i = 0; i < plan.samples; ++i) {
    SampleStream rng(plan.seed, i, static_cast<std::uint64_t>(Law::k_invariance));
    const Element x = sample_cone(desc, rng);
    const Element y = sample_cone(desc, rng);
    const Operator k = random_k_automorphism(desc, rng);

    const Operator t_x = t_operator(triangular_decompose(x, plan.frame));
    const Operator p_x = quad_rep(sqrt(x));
    const Operator k_x = quad_rep(power(x, -0.5)) * t_x;

    report.record_residual(max_abs_diff(k_x.apply(e), e), 1.0, plan.tol);
    report.record_residual(max_abs_diff(k_x.transpose() * k_x, id), 1.0, plan.tol);
    report.record_residual(max_abs_diff(p_x * k_x, t_x), max_abs(t_x.matrix()), plan.tol);

    const double fx = f(x);
    const double fy = f(y);
    report.record(f(k.apply(x)), fx, plan.tol);
    report.record(fx + fy, f(t_x.apply(y)), plan.tol);
    report.record(fx + fy, f(p_x.apply(y)), plan.tol);
    // w(x) k_x^{-1} u = P(x^{1/2}) u reduces the w2 equation to the w1 one.
    report.record(fx + f(k_x.transpose().apply(y)), f(p_x.apply(y)), plan.tol);
  }
  return report;
}

}  // namespace coneforge
