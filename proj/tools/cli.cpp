#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "coneforge/coneforge.hpp"
#include "coneforge/json_io.hpp"

namespace coneforge::cli {

namespace {

using Json = nlohmann::json;
namespace io = coneforge::json;

struct Config {
  std::string input;
  std::string frame_path;
  double tol_abs = Tolerance{}.abs;
  double tol_rel = Tolerance{}.rel;
  int samples = 1000;
  std::uint64_t seed = 42;
  std::vector<double> s;
  double lambda2 = 0.5;
  double alpha = 0.02;
  std::string algebra = "sym_real";
  int r = 3;
  int n = 3;
  std::string law;
  std::string check = "cauchy";
  double a0 = 0.0;
  double b0 = 0.0;
  double perturb = 0.0;
  std::string output;

  Tolerance tol() const { return {tol_abs, tol_rel}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AlgebraDescriptor descriptor_of(const Config& cfg) {
  if (cfg.algebra == "sym_real") return AlgebraDescriptor::sym_real(cfg.r);
  if (cfg.algebra == "lorentz") return AlgebraDescriptor::lorentz(cfg.n);
  throw UsageError("unknown algebra '" + cfg.algebra + "'");
}

Json read_json_source(const std::string& source) {
  if (!source.empty() && source.front() == '{') return Json::parse(source);
  std::ifstream in(source);
  if (!in) throw UsageError("cannot open '" + source + "'");
  return Json::parse(in);
}

// "unit:i,j" (one-based) builds mu_ij + mu_ji, or mu_ii, in S_r(R).
std::optional<Element> parse_unit(const std::string& source, int r) {
  const std::string prefix = "unit:";
  if (source.rfind(prefix, 0) != 0) return std::nullopt;
  const std::string rest = source.substr(prefix.size());
  const auto comma = rest.find(',');
  if (comma == std::string::npos) throw UsageError("expected unit:i,j");
  const int i = std::stoi(rest.substr(0, comma));
  const int j = std::stoi(rest.substr(comma + 1));
  return unit_element(r, i - 1, j - 1);
}

Element read_element(const Config& cfg) {
  if (auto unit = parse_unit(cfg.input, cfg.r)) return *unit;
  if (cfg.input == "identity") return identity(descriptor_of(cfg));
  return io::element_from_json(read_json_source(cfg.input));
}

JordanFrame frame_for(const Config& cfg, const AlgebraDescriptor& desc) {
  if (cfg.frame_path.empty()) return standard_frame(desc);
  JordanFrame frame = io::frame_from_json(read_json_source(cfg.frame_path));
  if (!(frame.descriptor() == desc)) throw InvalidInput("frame belongs to a different algebra");
  return frame;
}

Vector exponents_for(const Config& cfg, int r) {
  if (cfg.s.empty()) return Vector(r, 1.0);
  if (static_cast<int>(cfg.s.size()) != r)
    throw UsageError("--s needs " + std::to_string(r) + " comma-separated exponents");
  return cfg.s;
}

void emit(const Json& j, const Config& cfg, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw UsageError("cannot write '" + cfg.output + "'");
  f << text;
}

int cmd_spectral(const Config& cfg, std::ostream& out) {
  emit(io::spectral_to_json(spectral_decompose(read_element(cfg))), cfg, out);
  return 0;
}

int cmd_peirce(const Config& cfg, std::ostream& out) {
  const Element x = read_element(cfg);
  emit(io::blocks_to_json(joint_peirce(x, frame_for(cfg, x.descriptor()), cfg.tol())), cfg, out);
  return 0;
}

int cmd_triangular(const Config& cfg, std::ostream& out) {
  std::optional<Element> x;
  std::optional<JordanFrame> given_frame;
  if (!parse_unit(cfg.input, cfg.r) && cfg.input != "identity") {
    const Json j = read_json_source(cfg.input);
    if (j.contains("alphas")) {
      const TriangularDecomposition d = io::decomposition_from_json(j);
      x = d.reconstruct();
      given_frame = d.frame;
    } else {
      x = io::element_from_json(j);
    }
  } else {
    x = read_element(cfg);
  }
  const JordanFrame frame =
      given_frame && cfg.frame_path.empty() ? *given_frame : frame_for(cfg, x->descriptor());
  const TriangularDecomposition d = triangular_decompose(*x, frame, cfg.tol());
  Json j = io::decomposition_to_json(d);
  j["reconstruction_residual"] = max_abs_diff(d.reconstruct(), *x);
  emit(j, cfg, out);
  return 0;
}

int cmd_minors(const Config& cfg, std::ostream& out) {
  const Element x = read_element(cfg);
  const JordanFrame frame = frame_for(cfg, x.descriptor());
  Json j{{"minors", principal_minors(x, frame)}};
  if (!cfg.s.empty()) {
    const SVector s{exponents_for(cfg, frame.rank())};
    j["s"] = s.values;
    j["delta_s"] = delta_s(x, s, frame);
  }
  emit(j, cfg, out);
  return 0;
}

MultiplicationAlgorithm parse_algorithm(const std::string& law) {
  if (law == "w1") return MultiplicationAlgorithm::w1;
  if (law == "w2") return MultiplicationAlgorithm::w2;
  throw UsageError("--law must be w1 or w2 here, got '" + law + "'");
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const AlgebraDescriptor desc = descriptor_of(cfg);
  SamplingPlan plan = SamplingPlan::standard(desc, cfg.samples, cfg.seed, cfg.tol());
  if (!cfg.frame_path.empty()) plan.frame = frame_for(cfg, desc);

  ResidualReport report;
  if (cfg.law == "k_invariance") {
    report = k_invariance_reduction_check(plan);
  } else if (cfg.law == "character") {
    report = check_character_multiplicativity(SVector{exponents_for(cfg, desc.rank)}, plan);
  } else {
    const MultiplicationAlgorithm w = parse_algorithm(cfg.law);
    if (cfg.check == "det") {
      report = det_multiplicativity(w, plan);
    } else if (cfg.check == "cauchy") {
      const LogFamily f = w == MultiplicationAlgorithm::w1
                              ? LogFamily::log_det(cfg.s.empty() ? 1.0 : cfg.s.front())
                              : LogFamily::log_minors(exponents_for(cfg, desc.rank), plan.frame);
      report = check_cauchy(w, f, plan);
    } else {
      throw UsageError("--check must be cauchy or det");
    }
  }
  emit(io::report_to_json(report), cfg, out);
  return report.pass ? 0 : 1;
}

int cmd_witness(const Config& cfg, std::ostream& out) {
  const AlgebraDescriptor desc = descriptor_of(cfg);
  const JordanFrame frame = standard_frame(desc);
  Element z = Element::zero(desc);
  if (desc.kind == AlgebraKind::sym_real) {
    if (desc.rank < 2) throw UsageError("witness needs rank >= 2");
    z = unit_element(desc.rank, 0, 1);
  } else {
    // (0, e_2): unit-length spatial part orthogonal to u = e_1.
    z = Element::basis(desc, 2) ;
  }
  const Tolerance tol{std::max(cfg.tol_abs, 1e-8), cfg.tol_rel};
  const WitnessPair p = detwth_witness(frame[0], frame[1], z, cfg.lambda2, cfg.alpha, tol);
  emit(Json{{"lambda2", p.lambda2},
            {"alpha", p.alpha},
            {"alpha_upper", witness_alpha_upper(p.lambda2)},
            {"x", io::element_to_json(p.x)},
            {"y", io::element_to_json(p.y)},
            {"b", io::element_to_json(p.b)},
            {"residual_a", p.residual_a},
            {"residual_b", p.residual_b},
            {"pass", true}},
       cfg, out);
  return 0;
}

int cmd_character(const Config& cfg, std::ostream& out) {
  if (!cfg.input.empty()) {
    const TriangularDecomposition d = io::decomposition_from_json(read_json_source(cfg.input));
    const SVector s{exponents_for(cfg, d.frame.rank())};
    emit(Json{{"s", s.values}, {"character", triangular_character(d, s)}}, cfg, out);
    return 0;
  }
  const AlgebraDescriptor desc = descriptor_of(cfg);
  const SamplingPlan plan = SamplingPlan::standard(desc, cfg.samples, cfg.seed, cfg.tol());
  const ResidualReport report = check_character_multiplicativity(SVector{exponents_for(cfg, desc.rank)}, plan);
  emit(io::report_to_json(report), cfg, out);
  return report.pass ? 0 : 1;
}

int cmd_pexider(const Config& cfg, std::ostream& out) {
  const AlgebraDescriptor desc = descriptor_of(cfg);
  const MultiplicationAlgorithm w = parse_algorithm(cfg.law.empty() ? "w1" : cfg.law);
  const SamplingPlan plan = SamplingPlan::standard(desc, cfg.samples, cfg.seed, cfg.tol());
  const LogFamily f = w == MultiplicationAlgorithm::w1
                          ? LogFamily::log_det()
                          : LogFamily::log_minors(exponents_for(cfg, desc.rank), plan.frame);
  const double a0 = cfg.a0, b0 = cfg.b0, bump = cfg.perturb;
  const ConeFunction a = [f, a0](const Element& x) { return f(x) + a0; };
  const ConeFunction b = [f, b0](const Element& x) { return f(x) + b0; };
  const ConeFunction c = [f, a0, b0, bump](const Element& x) {
    return f(x) + a0 + b0 + (det(x) > 1.0 ? bump : 0.0);
  };
  const PexiderResult res = pexider_analyze(a, b, c, w, plan);
  emit(Json{{"a0", res.a0}, {"b0", res.b0}, {"report", io::report_to_json(res.report)}}, cfg, out);
  return res.report.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("CONEFORGE_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: CONEFORGE_SEED is not an unsigned integer\n";
      return 2;
    }
  }

  CLI::App app{"coneforge: Euclidean Jordan algebra decompositions and functional-equation checks"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol-abs", cfg.tol_abs, "absolute tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--tol-rel", cfg.tol_rel, "relative tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--samples", cfg.samples, "number of random samples")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "sampling seed (default 42, or CONEFORGE_SEED)");
    sub->add_option("--frame", cfg.frame_path, "Jordan frame JSON (file or inline)");
    sub->add_option("--s", cfg.s, "comma-separated exponents")->delimiter(',');
    sub->add_option("--algebra", cfg.algebra, "sym_real or lorentz")
        ->check(CLI::IsMember({"sym_real", "lorentz"}));
    sub->add_option("--r", cfg.r, "matrix size for sym_real")->check(CLI::PositiveNumber);
    sub->add_option("--n", cfg.n, "spatial dimension for lorentz")->check(CLI::Range(2, 1 << 20));
    sub->add_option("-o,--output", cfg.output, "write JSON here instead of stdout");
  };
  auto add_input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("input", cfg.input, "element JSON (file, inline, unit:i,j or identity)");
    if (required) opt->required();
  };

  auto* spectral = app.add_subcommand("spectral", "spectral decomposition of an element");
  auto* peirce = app.add_subcommand("peirce", "joint Peirce blocks with respect to a frame");
  auto* triangular = app.add_subcommand("triangular", "triangular (generalized Cholesky) decomposition");
  auto* minors = app.add_subcommand("minors", "principal minors and Delta_s");
  auto* verify = app.add_subcommand("verify", "sampled residual check of a functional equation");
  auto* witness = app.add_subcommand("witness", "witness pair for the w1 uniqueness argument");
  auto* character = app.add_subcommand("character", "triangular group characters");
  auto* pexider = app.add_subcommand("pexider", "Pexider reduction of a planted triple");

  for (auto* sub : {spectral, peirce, triangular, minors, verify, witness, character, pexider}) add_common(sub);
  for (auto* sub : {spectral, peirce, triangular, minors}) add_input(sub, true);
  add_input(character, false);

  verify->add_option("--law", cfg.law, "w1, w2, k_invariance or character")->required();
  verify->add_option("--check", cfg.check, "cauchy or det");
  witness->add_option("--lambda2", cfg.lambda2, "lambda^2 in (0, 1)");
  witness->add_option("--alpha", cfg.alpha, "alpha in (0, lambda^8/(1+lambda^2)^2)");
  pexider->add_option("--law", cfg.law, "w1 or w2");
  pexider->add_option("--a0", cfg.a0, "planted constant a0");
  pexider->add_option("--b0", cfg.b0, "planted constant b0");
  pexider->add_option("--perturb", cfg.perturb, "offset added to c where det(x) > 1");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*spectral) return cmd_spectral(cfg, out);
    if (*peirce) return cmd_peirce(cfg, out);
    if (*triangular) return cmd_triangular(cfg, out);
    if (*minors) return cmd_minors(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*witness) return cmd_witness(cfg, out);
    if (*character) return cmd_character(cfg, out);
    if (*pexider) return cmd_pexider(cfg, out);
  } catch (const ToleranceExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace coneforge::cli
