// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "coneforge/coneforge.hpp"
#include "coneforge/json_io.hpp"
#include "coneforge/triangular.hpp"
#include "oracles.hpp"

using namespace coneforge;

namespace {

const std::vector<AlgebraDescriptor>& all_algebras() {
  static const std::vector<AlgebraDescriptor> v{
      AlgebraDescriptor::sym_real(2), AlgebraDescriptor::sym_real(3), AlgebraDescriptor::sym_real(5),
      AlgebraDescriptor::lorentz(2),  AlgebraDescriptor::lorentz(3),  AlgebraDescriptor::lorentz(6)};
  return v;
}

/// Running maximum of named residuals against a fixed limit.
struct Check {
  std::string name;
  double limit;
  double worst = 0.0;
  bool ok = true;

  void add(double residual) {
    if (!(residual <= limit)) ok = false;  // NaN fails too
    if (std::isnan(residual) || residual > worst) worst = residual;
  }
  void require(bool cond) { ok = ok && cond; }
};

struct Outcome {
  bool pass = true;
  std::string detail;

  void absorb(const Check& c) {
    pass = pass && c.ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s=%.2e(<%.0e)%s", detail.empty() ? "" : " ", c.name.c_str(), c.worst,
                  c.limit, c.ok ? "" : "!");
    detail += buf;
  }
  void note(bool ok, const std::string& what) {
    pass = pass && ok;
    detail += (detail.empty() ? "" : " ") + what + (ok ? "" : "!");
  }
};

double scale_of(const Element& x) { return std::max(1.0, max_abs(x)); }

Element random_element(const AlgebraDescriptor& d, SampleStream& rng) { return sample_element(d, rng); }

// --- 1 ----------------------------------------------------------------------

Outcome jordan_axioms() {
  Check comm{"commutativity", 1e-9}, jordan{"jordan_identity", 1e-9}, assoc{"form_associativity", 1e-9};
  for (const auto& d : all_algebras()) {
    for (int i = 0; i < 500; ++i) {
      SampleStream rng(1001, i, d.ambient_dim);
      const Element x = random_element(d, rng), y = random_element(d, rng), z = random_element(d, rng);
      const double sx = max_abs(x), sy = max_abs(y), sz = max_abs(z);
      comm.add(max_abs_diff(jordan_product(x, y), jordan_product(y, x)) / (sx * sy));
      const Element x2 = square(x);
      jordan.add(max_abs_diff(jordan_product(x, jordan_product(x2, y)), jordan_product(x2, jordan_product(x, y))) /
                 (sx * sx * sx * sy));
      assoc.add(std::abs(inner(x, jordan_product(y, z)) - inner(jordan_product(x, y), z)) / (sx * sy * sz));
    }
  }
  Outcome o;
  o.absorb(comm);
  o.absorb(jordan);
  o.absorb(assoc);
  return o;
}

// --- 2 ----------------------------------------------------------------------

Outcome w1_equation() {
  Check pos{"logdet", 1e-9};
  double min_violation = 1e300;
  for (const auto& d : all_algebras()) {
    const SamplingPlan plan = SamplingPlan::standard(d, 1000, 42);
    pos.add(check_cauchy(MultiplicationAlgorithm::w1, LogFamily::log_det(), plan).max_abs_residual);
    Vector s(d.rank, 0.0);
    s[0] = 1.0;
    const ResidualReport neg =
        check_cauchy(MultiplicationAlgorithm::w1, LogFamily::log_minors(s, plan.frame), plan);
    min_violation = std::min(min_violation, neg.max_abs_residual);
  }
  Outcome o;
  o.absorb(pos);
  char buf[96];
  std::snprintf(buf, sizeof buf, "neg_log_delta1_min_over_algebras=%.2e(>1e-2)", min_violation);
  o.note(min_violation > 0.01, buf);
  return o;
}

// --- 3 ----------------------------------------------------------------------

Outcome w2_equation() {
  Check pos{"sum_s_log_delta", 1e-9};
  double min_violation = 1e300;
  std::vector<AlgebraDescriptor> algebras{AlgebraDescriptor::sym_real(2), AlgebraDescriptor::sym_real(3),
                                          AlgebraDescriptor::sym_real(4), AlgebraDescriptor::lorentz(3)};
  for (const auto& d : algebras) {
    const SamplingPlan plan = SamplingPlan::standard(d, 1000, 42);
    SampleStream srng(3003, d.ambient_dim);
    Vector s(d.rank);
    for (double& v : s) v = srng.uniform(-2.0, 2.0);
    pos.add(check_cauchy(MultiplicationAlgorithm::w2, LogFamily::log_minors(s, plan.frame), plan).max_abs_residual);

    const JordanFrame rotated = transform_frame(random_k_automorphism(d, 77), plan.frame);
    const ResidualReport neg =
        check_cauchy(MultiplicationAlgorithm::w2, LogFamily::log_minors(s, rotated), plan);
    min_violation = std::min(min_violation, neg.max_abs_residual);
  }
  Outcome o;
  o.absorb(pos);
  char buf[96];
  std::snprintf(buf, sizeof buf, "neg_rotated_frame_min=%.2e(>1e-2)", min_violation);
  o.note(min_violation > 0.01, buf);
  return o;
}

// --- 4 ----------------------------------------------------------------------

Outcome idempotent_split() {
  Check recon{"reconstruction", 1e-9}, orth{"<a,c>", 1e-9}, norm{"|z|^2-2", 1e-9}, half{"half_spaces", 1e-9},
      idem{"c_idempotent", 1e-9};
  int retries = 0;
  for (const auto& d : {AlgebraDescriptor::sym_real(3), AlgebraDescriptor::sym_real(5), AlgebraDescriptor::lorentz(3)}) {
    const JordanFrame f = standard_frame(d);
    int made = 0;
    for (std::uint64_t i = 0; made < 200; ++i) {
      SampleStream rng(4004, i, d.ambient_dim);
      const Element a = random_k_automorphism(d, rng).apply(f[0]);
      const Element b = random_k_automorphism(d, rng).apply(f[d.rank - 1]);
      const double ab = trace_inner(a, b);
      if (ab < 1e-3 || ab > 1.0 - 1e-3) {
        ++retries;
        continue;
      }
      ++made;
      const IdempotentSplit s = nonorthogonal_split(a, b);
      recon.add(max_abs_diff(s.lambda * s.lambda * a + s.mu * s.mu * s.c + s.lambda * s.mu * s.z, b));
      orth.add(std::abs(trace_inner(a, s.c)));
      norm.add(std::abs(trace_norm2(s.z) - 2.0));
      half.add(std::max(max_abs_diff(jordan_product(a, s.z), 0.5 * s.z),
                        max_abs_diff(jordan_product(s.c, s.z), 0.5 * s.z)));
      idem.add(std::max(max_abs_diff(square(s.c), s.c), std::abs(trace(s.c) - 1.0)));
    }
  }
  Outcome o;
  for (const Check* c : {&recon, &orth, &norm, &half, &idem}) o.absorb(*c);
  o.detail += " retries=" + std::to_string(retries);
  return o;
}

// --- 5 ----------------------------------------------------------------------

Outcome frobenius_formulas() {
  Check i_e{"(i)tau_e", 1e-9}, i_a{"(i)tau_a", 1e-9}, ii_a{"(ii)P_a", 1e-9}, ii_z{"(ii)P_z", 1e-9},
      iii{"(iii)", 1e-9};
  const std::vector<AlgebraDescriptor> algebras{AlgebraDescriptor::sym_real(2), AlgebraDescriptor::sym_real(3),
                                                AlgebraDescriptor::sym_real(4), AlgebraDescriptor::lorentz(2),
                                                AlgebraDescriptor::lorentz(4)};
  for (int i = 0; i < 200; ++i) {
    const AlgebraDescriptor& d = algebras[i % algebras.size()];
    SampleStream rng(5005, i);
    const JordanFrame f = transform_frame(random_k_automorphism(d, rng), standard_frame(d));
    const int p = static_cast<int>(rng.uniform(0, d.rank - 1e-9));
    int q = static_cast<int>(rng.uniform(0, d.rank - 1 - 1e-9));
    if (q >= p) ++q;
    const Element& a = f[p];
    const Element& b = f[q];
    const Element e = identity(d);

    const Element z = sample_peirce_block(f, std::min(p, q), std::max(p, q), rng);
    const double zz = trace_norm2(z);
    const Operator tau = frobenius(a, z);
    i_e.add(max_abs_diff(tau.apply(e), e + z + 0.5 * zz * b) / scale_of(z));
    i_a.add(max_abs_diff(tau.apply(a), a + z + 0.5 * zz * b) / scale_of(z));

    const Element zn = z * std::sqrt(2.0 / zz);
    const double al = rng.uniform(-2, 2), be = rng.uniform(-2, 2), ga = rng.uniform(-2, 2);
    const Operator pw = quad_rep(al * a + be * b + ga * zn);
    ii_a.add(max_abs_diff(pw.apply(a), al * al * a + ga * ga * b + al * ga * zn));
    ii_z.add(max_abs_diff(pw.apply(zn), 2 * al * ga * a + 2 * be * ga * b + (al * be + ga * ga) * zn));

    Element x = Element::zero(d), y = Element::zero(d);
    for (int k = 0; k < d.rank; ++k) {
      x += rng.uniform(0.1, 3.0) * f[k];
      y += rng.uniform(-3.0, 3.0) * f[k];
    }
    iii.add(max_abs_diff(quad_rep(coneforge::sqrt(x)).apply(y), jordan_product(x, y)));
  }
  Outcome o;
  for (const Check* c : {&i_e, &i_a, &ii_a, &ii_z, &iii}) o.absorb(*c);
  return o;
}

// --- 6 ----------------------------------------------------------------------

Outcome witness_grid() {
  Check res{"residuals", 1e-8};
  bool all_in_cone = true;
  int broken = 0, grid_points = 0;
  struct Setup {
    Element a, c, z;
  };
  const JordanFrame s2 = standard_frame(AlgebraDescriptor::sym_real(2));
  const JordanFrame s3 = standard_frame(AlgebraDescriptor::sym_real(3));
  const JordanFrame l3 = standard_frame(AlgebraDescriptor::lorentz(3));
  const std::vector<Setup> setups{{s2[0], s2[1], unit_element(2, 0, 1)},
                                  {s3[0], s3[1], unit_element(3, 0, 1)},
                                  {l3[0], l3[1], oracle::lorentz(0.0, {0.0, 1.0, 0.0})}};
  for (double l2 : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const double upper = witness_alpha_upper(l2);
    for (const Setup& s : setups) {
      for (int k = 1; k <= 10; ++k) {
        const WitnessPair p = build_witness_pair(s.a, s.c, s.z, l2, upper * k / 11.0);
        res.add(std::max(p.residual_a, p.residual_b));
        all_in_cone = all_in_cone && is_in_cone(p.x, {0.0, 0.0}) && is_in_cone(p.y, {0.0, 0.0});
      }
      ++grid_points;
      const WitnessPair beyond = build_witness_pair(s.a, s.c, s.z, l2, 1.01 * upper);
      if (!is_in_cone(beyond.x, {0.0, 0.0}) || !is_in_cone(beyond.y, {0.0, 0.0})) ++broken;
    }
  }
  Outcome o;
  o.absorb(res);
  o.note(all_in_cone, "x,y_in_cone");
  o.note(broken >= 1, "cone_broken_at_1.01x=" + std::to_string(broken) + "/" + std::to_string(grid_points));
  return o;
}

// --- 7 ----------------------------------------------------------------------

Outcome triangular_machinery() {
  Check recon{"reconstruct", 1e-10}, ldl{"ldl_oracle", 1e-9}, azz{"lorentz_closed_form", 1e-10},
      mult{"delta_s(tx)", 1e-9}, unit{"delta_s(tau e)", 1e-9}, nil{"nilpotency", 1e-12};

  for (const auto& d : all_algebras()) {
    const JordanFrame f = standard_frame(d);
    for (int i = 0; i < 500; ++i) {
      SampleStream rng(7007, i, d.ambient_dim);
      const Element x = sample_cone(d, rng);
      recon.add(max_abs_diff(triangular_decompose(x, f).reconstruct(), x) / scale_of(x));
    }
  }

  // LDL^T from the Cholesky oracle: alpha_j = D_j, z^(j) = sum_k L_kj (mu_jk + mu_kj).
  for (int r : {2, 3, 5}) {
    const JordanFrame f = standard_frame(AlgebraDescriptor::sym_real(r));
    std::mt19937_64 g(70 + r);
    for (int i = 0; i < 100; ++i) {
      const oracle::Grid m = oracle::random_spd(r, g);
      const oracle::Grid t = oracle::cholesky(m);
      const TriangularDecomposition d = triangular_decompose(oracle::element(m), f);
      for (int j = 0; j < r; ++j) {
        ldl.add(std::abs(d.diag[j] - t[j][j] * t[j][j]));
        if (j + 1 == r) break;
        Element z = Element::zero(f.descriptor());
        for (int k = j + 1; k < r; ++k) z += (t[k][j] / t[j][j]) * unit_element(r, j, k);
        ldl.add(max_abs_diff(d.offdiag[j], z));
      }
    }
  }

  // alpha_1^2 = y0 + <y,u>, alpha_2^2 = det y / (y0 + <y,u>), z = (y - <y,u> u) / (y0 + <y,u>).
  for (int n : {2, 3, 6}) {
    const AlgebraDescriptor d = AlgebraDescriptor::lorentz(n);
    for (int i = 0; i < 200; ++i) {
      SampleStream rng(7107, i, n);
      Vector u(n);
      double nu = 0.0;
      for (double& v : u) nu += (v = rng.normal()) * v;
      for (double& v : u) v /= std::sqrt(nu);
      const Element y = sample_cone(d, rng);
      const auto c = y.coords();
      double yu = 0.0, yy = 0.0;
      for (int k = 0; k < n; ++k) {
        yu += c[k + 1] * u[k];
        yy += c[k + 1] * c[k + 1];
      }
      const double d1 = c[0] + yu;
      const TriangularDecomposition t = triangular_decompose(y, LorentzFrame(u).jordan_frame());
      azz.add(std::abs(t.diag[0] - d1) / scale_of(y));
      azz.add(std::abs(t.diag[1] - (c[0] * c[0] - yy) / d1) / scale_of(y));
      Vector z(n + 1, 0.0);
      for (int k = 0; k < n; ++k) z[k + 1] = (c[k + 1] - yu * u[k]) / d1;
      azz.add(max_abs_diff(t.offdiag[0].coords(), z));
    }
  }

  for (const auto& d : {AlgebraDescriptor::sym_real(3), AlgebraDescriptor::sym_real(4), AlgebraDescriptor::lorentz(3)}) {
    const JordanFrame f = standard_frame(d);
    const Element e = identity(d);
    for (int i = 0; i < 200; ++i) {
      SampleStream rng(7207, i, d.ambient_dim);
      SVector s{Vector(d.rank)};
      for (double& v : s.values) v = rng.uniform(-2, 2);
      const TriangularDecomposition td = sample_triangular(f, rng);
      const Operator t = t_operator(td);
      const Element x = sample_cone(d, rng);
      const double lhs = log_delta_s(t.apply(x), s, f);
      const double rhs = log_delta_s(t.apply(e), s, f) + log_delta_s(x, s, f);
      mult.add(std::abs(std::expm1(lhs - rhs)));
      for (int j = 0; j + 1 < d.rank; ++j) {
        unit.add(std::abs(delta_s(frobenius(f[j], td.offdiag[j]).apply(e), s, f) - 1.0));
        const Operator nn = 2.0 * box(td.offdiag[j], f[j]);
        nil.add(max_abs((nn * nn * nn).matrix()) / std::pow(scale_of(td.offdiag[j]), 3));
      }
    }
  }
  Outcome o;
  for (const Check* c : {&recon, &ldl, &azz, &mult, &unit, &nil}) o.absorb(*c);
  return o;
}

// --- 8 ----------------------------------------------------------------------

Outcome det_mult() {
  Check w1{"w1", 1e-9}, w2{"w2", 1e-9};
  for (const auto& d : all_algebras()) {
    const SamplingPlan plan = SamplingPlan::standard(d, 1000, 42);
    w1.add(det_multiplicativity(MultiplicationAlgorithm::w1, plan).max_rel_residual);
    w2.add(det_multiplicativity(MultiplicationAlgorithm::w2, plan).max_rel_residual);
  }
  Outcome o;
  o.absorb(w1);
  o.absorb(w2);
  return o;
}

// --- 9 ----------------------------------------------------------------------

Outcome lorentz_closed_forms() {
  Check quad{"P(sqrt x)y", 1e-10}, params{"alpha,z", 1e-10}, tmap{"t_y x", 1e-10};
  for (int n : {2, 3, 6}) {
    const AlgebraDescriptor d = AlgebraDescriptor::lorentz(n);
    for (int i = 0; i < 500; ++i) {
      SampleStream rng(9009, i, n);
      Vector u(n);
      double nu = 0.0;
      for (double& v : u) nu += (v = rng.normal()) * v;
      for (double& v : u) v /= std::sqrt(nu);
      const Element x = sample_cone(d, rng), y = sample_cone(d, rng);
      const LorentzElement lx = to_lorentz(x), ly = to_lorentz(y);
      const double sc = scale_of(x) * scale_of(y);

      const Element generic_q = quad_rep(coneforge::sqrt(x)).apply(y);
      quad.add(max_abs_diff(to_element(lorentz_quad_sqrt_apply(lx, ly)), generic_q) / sc);

      const JordanFrame f = LorentzFrame(u).jordan_frame();
      const TriangularDecomposition t = triangular_decompose(y, f);
      const LorentzTriangularParams p = lorentz_triangular_params(ly, u);
      params.add(std::abs(p.alpha1 * p.alpha1 - t.diag[0]) / scale_of(y));
      params.add(std::abs(p.alpha2 * p.alpha2 - t.diag[1]) / scale_of(y));
      params.add(max_abs_diff(to_element(p.z), t.offdiag[0]));

      const Element generic_t = t_operator(t).apply(x);
      tmap.add(max_abs_diff(to_element(lorentz_t_apply(ly, lx, u)), generic_t) / sc);
    }
  }
  Outcome o;
  for (const Check* c : {&quad, &params, &tmap}) o.absorb(*c);
  return o;
}

// --- 10 ---------------------------------------------------------------------

Outcome polar_and_characters() {
  Check fix{"k_x e=e", 1e-9}, iso{"k_x^T k_x=I", 1e-9}, aut{"k_x_automorphism", 1e-9}, red{"reduction", 1e-9},
      chr{"character", 1e-9}, pex{"pexider_recovery", 1e-9};
  bool rejected = true;
  for (const auto& d : {AlgebraDescriptor::sym_real(3), AlgebraDescriptor::sym_real(4), AlgebraDescriptor::lorentz(3)}) {
    const JordanFrame f = standard_frame(d);
    const Element e = identity(d);
    const Operator id = Operator::identity(d);
    for (int i = 0; i < 200; ++i) {
      SampleStream rng(10010, i, d.ambient_dim);
      const Element x = sample_cone(d, rng);
      const Operator k = polar_k_factor(x, f);
      fix.add(max_abs_diff(k.apply(e), e));
      iso.add(max_abs_diff(k.transpose() * k, id));
      const Element a = sample_element(d, rng), b = sample_element(d, rng);
      aut.add(max_abs_diff(k.apply(jordan_product(a, b)), jordan_product(k.apply(a), k.apply(b))) /
              (scale_of(a) * scale_of(b)));
    }
    const SamplingPlan plan = SamplingPlan::standard(d, 200, 42);
    const ResidualReport r = k_invariance_reduction_check(plan);
    red.add(r.pass ? r.max_abs_residual : std::max(r.max_abs_residual, 1.0));

    SampleStream srng(10110, d.ambient_dim);
    SVector s{Vector(d.rank)};
    for (double& v : s.values) v = srng.uniform(-2, 2);
    chr.add(check_character_multiplicativity(s, plan).max_rel_residual);

    for (MultiplicationAlgorithm w : {MultiplicationAlgorithm::w1, MultiplicationAlgorithm::w2}) {
      const double a0 = srng.uniform(-3, 3), b0 = srng.uniform(-3, 3);
      const LogFamily fam = w == MultiplicationAlgorithm::w1 ? LogFamily::log_det()
                                                             : LogFamily::log_minors(s.values, f);
      const ConeFunction fa = [fam, a0](const Element& y) { return fam(y) + a0; };
      const ConeFunction fb = [fam, b0](const Element& y) { return fam(y) + b0; };
      const ConeFunction fc = [fam, a0, b0](const Element& y) { return fam(y) + a0 + b0; };
      const PexiderResult pr = pexider_reduce(fa, fb, fc, w, plan);
      pex.add(std::max(std::abs(pr.a0 - a0), std::abs(pr.b0 - b0)));
      for (int i = 0; i < 50; ++i) {
        SampleStream rng(10210, i, d.ambient_dim);
        const Element y = sample_cone(d, rng);
        pex.add(std::abs(pr.f(y) - fam(y)));
      }
      const ConeFunction bumped = [fam, a0, b0](const Element& y) {
        return fam(y) + a0 + b0 + (det(y) > 1.0 ? 0.1 : 0.0);
      };
      try {
        pexider_reduce(fa, fb, bumped, w, plan);
        rejected = false;
      } catch (const ToleranceExceeded&) {
      }
    }
  }
  Outcome o;
  for (const Check* c : {&fix, &iso, &aut, &red, &chr, &pex}) o.absorb(*c);
  o.note(rejected, "perturbed_triple_rejected");
  return o;
}

// --- 11 ---------------------------------------------------------------------

int cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::vector<std::string> argv{"coneforge"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream o, e;
  const int code = coneforge::cli::run(argv, o, e);
  if (out) *out = o.str();
  return code;
}

Outcome cli_determinism() {
  Outcome o;
  std::string a, b;
  const int ca = cli({"verify", "--law", "w2", "--seed", "42"}, &a);
  const int cb = cli({"verify", "--law", "w2", "--seed", "42"}, &b);
  o.note(ca == 0 && cb == 0 && !a.empty() && a == b, "verify_w2_byte_identical");

  const auto path = std::filesystem::temp_directory_path() / "coneforge_acceptance_elem.json";
  std::ofstream(path) << R"({"algebra":"sym_real","r":2,"matrix":[[2,1],[1,2]]})";
  std::string spectral;
  bool eig_ok = cli({"spectral", path.string()}, &spectral) == 0;
  if (eig_ok) {
    const auto j = nlohmann::json::parse(spectral);
    eig_ok = std::abs(j.at("eigenvalues")[0].get<double>() - 3.0) < 1e-12 &&
             std::abs(j.at("eigenvalues")[1].get<double>() - 1.0) < 1e-12;
  }
  o.note(eig_ok, "spectral_example");
  o.note(cli({"verify", "--law", "w1", "--algebra", "sym_real", "--r", "3", "--samples", "1000", "--seed", "42"}) == 0,
         "verify_example");
  std::string w;
  bool wit_ok = cli({"witness", "--lambda2", "0.5", "--alpha", "0.02"}, &w) == 0;
  if (wit_ok) {
    const auto j = nlohmann::json::parse(w);
    wit_ok = j.at("residual_a").get<double>() < 1e-8 && j.at("residual_b").get<double>() < 1e-8;
  }
  o.note(wit_ok, "witness_example");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "jordan_axioms", jordan_axioms},
      {2, "w1_log_cauchy", w1_equation},
      {3, "w2_log_cauchy", w2_equation},
      {4, "nonorthogonal_idempotent_split", idempotent_split},
      {5, "frobenius_quadratic_formulas", frobenius_formulas},
      {6, "w1_witness_pair", witness_grid},
      {7, "triangular_machinery", triangular_machinery},
      {8, "det_multiplicativity", det_mult},
      {9, "lorentz_closed_forms", lorentz_closed_forms},
      {10, "polar_character_pexider", polar_and_characters},
      {11, "cli_determinism", cli_determinism},
  };

  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [%2d] %-32s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    failures += !o.pass;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
              total);
  return failures == 0 ? 0 : 1;
}
