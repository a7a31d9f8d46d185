#include "coneforge/json_io.hpp"

#include <cmath>

#include "coneforge/errors.hpp"
#include "coneforge/lorentz.hpp"
#include "coneforge/sym_real.hpp"

namespace coneforge::json {

namespace {

template <typename F>
auto translating(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string(what) + ": " + ex.what());
  }
}


bool is_lorentz_frame(const JordanFrame& frame) {
  return !frame.idempotents.empty() && frame.descriptor().kind == AlgebraKind::lorentz;
}

}  // namespace

json element_to_json(const Element& x) {
  const AlgebraDescriptor& desc = x.descriptor();
  if (desc.kind == AlgebraKind::lorentz) {
    const LorentzElement v = to_lorentz(x);
    return json{{"algebra", "lorentz"}, {"n", v.n()}, {"x0", v.x0}, {"x", v.x}};
  }
  const SymMatrix m = to_sym_matrix(x);
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"algebra", "sym_real"}, {"r", m.size()}, {"matrix", std::move(rows)}};
}

Element element_from_json(const json& j) {
  return translating("element", [&] {
    if (!j.is_object()) throw InvalidInput("element: expected a JSON object");
    const std::string algebra = j.at("algebra").get<std::string>();
    if (algebra == "lorentz") {
      LorentzElement v{j.at("x0").get<double>(), j.at("x").get<Vector>()};
      if (j.contains("n") && j.at("n").get<int>() != v.n())
        throw InvalidInput("element: n does not match length of x");
      if (v.n() < 2) throw InvalidInput("element: lorentz requires n >= 2");
      return to_element(v);
    }
    if (algebra == "sym_real") {
      const auto rows = j.at("matrix").get<std::vector<Vector>>();
      const int r = static_cast<int>(rows.size());
      if (r == 0) throw InvalidInput("element: empty matrix");
      if (j.contains("r") && j.at("r").get<int>() != r)
        throw InvalidInput("element: r does not match matrix size");
      Matrix m(r, r);
      for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != r) throw InvalidInput("element: matrix is not square");
        for (int k = 0; k < r; ++k) m(i, k) = rows[i][k];
      }
      return to_element(SymMatrix(m));
    }
    throw InvalidInput("element: unknown algebra '" + algebra + "'");
  });
}

json frame_to_json(const JordanFrame& frame) {
  json out{{"idempotents", json::array()}};
  for (const Element& c : frame.idempotents) out["idempotents"].push_back(element_to_json(c));
  if (is_lorentz_frame(frame)) {
    const LorentzElement c = to_lorentz(frame[0]);
    Vector u = c.x;
    for (double& v : u) v *= 2.0;
    out["u"] = u;
  }
  return out;
}

JordanFrame frame_from_json(const json& j) {
  return translating("frame", [&] {
    if (j.contains("frame") && !j.contains("idempotents") && !j.contains("u"))
      return frame_from_json(j.at("frame"));
    JordanFrame frame;
    if (j.contains("idempotents")) {
      for (const auto& c : j.at("idempotents")) frame.idempotents.push_back(element_from_json(c));
    } else if (j.contains("u")) {
      frame = LorentzFrame(j.at("u").get<Vector>()).jordan_frame();
    } else {
      throw InvalidInput("frame: expected 'idempotents' or 'u'");
    }
    validate_frame(frame);
    return frame;
  });
}

json spectral_to_json(const SpectralDecomposition& s) {
  return json{{"eigenvalues", s.eigenvalues}, {"frame", frame_to_json(s.frame)}};
}

json blocks_to_json(const PeirceBlocks& blocks) {
  json b = json::object();
  for (const auto& [key, value] : blocks.blocks)
    b[std::to_string(key.first + 1) + "," + std::to_string(key.second + 1)] = element_to_json(value);
  return json{{"frame", frame_to_json(blocks.frame)}, {"blocks", std::move(b)}};
}

json decomposition_to_json(const TriangularDecomposition& d) {
  json z = json::array();
  for (const Element& v : d.offdiag) z.push_back(element_to_json(v));
  return json{{"frame", frame_to_json(d.frame)}, {"alphas", d.diag}, {"z", std::move(z)}};
}

TriangularDecomposition decomposition_from_json(const json& j) {
  return translating("decomposition", [&] {
    TriangularDecomposition d{frame_from_json(j.at("frame")), {}, j.at("alphas").get<Vector>()};
    for (const auto& z : j.at("z")) d.offdiag.push_back(element_from_json(z));
    const int r = d.frame.rank();
    if (static_cast<int>(d.diag.size()) != r || static_cast<int>(d.offdiag.size()) != r - 1)
      throw InvalidInput("decomposition: expected r alphas and r-1 off-diagonal elements");
    for (double a : d.diag)
      if (!(a > 0.0)) throw InvalidInput("decomposition: alphas must be positive");
    for (const Element& z : d.offdiag) require_same_algebra(z, d.frame[0]);
    return d;
  });
}

json report_to_json(const ResidualReport& r) {
  return json{{"law", to_string(r.law)},
              {"samples", r.samples},
              {"max_abs_residual", r.max_abs_residual},
              {"max_rel_residual", r.max_rel_residual},
              {"seed", r.seed},
              {"pass", r.pass}};
}

}  // namespace coneforge::json
