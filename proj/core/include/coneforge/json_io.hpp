#pragma once

#include <nlohmann/json.hpp>

#include "coneforge/algebra.hpp"
#include "coneforge/cauchy_lab.hpp"
#include "coneforge/peirce.hpp"
#include "coneforge/triangular.hpp"

namespace coneforge::json {

using nlohmann::json;

json element_to_json(const Element& x);
/// {"algebra":"sym_real","r":..,"matrix":[[..]]} or
/// {"algebra":"lorentz","n":..,"x0":..,"x":[..]}. Throws InvalidInput.
Element element_from_json(const json& j);

json frame_to_json(const JordanFrame& frame);
JordanFrame frame_from_json(const json& j);

json spectral_to_json(const SpectralDecomposition& s);

/// Keys "i,j" are one-based.
json blocks_to_json(const PeirceBlocks& blocks);

json decomposition_to_json(const TriangularDecomposition& d);
TriangularDecomposition decomposition_from_json(const json& j);

json report_to_json(const ResidualReport& r);

}  // namespace coneforge::json
