#pragma once

#include <nlohmann/json.hpp>

#include "nilgeo/algebra.hpp"

namespace nilgeo {

/// Parses an algebra document:
/// { "dim": n, "basis": [names],
///   "params": {"symbols": [...], "positive": [...], "nonneg": [...]},
///   "brackets": [ {"i": 1, "j": 2, "value": {basis_name: poly-string}} ] }
/// Bracket indices are 1-based. "symbols" may be omitted; symbols are then
/// collected from the assumption lists and the bracket polynomials. The
/// metric is the orthonormal one; documents carrying a Gram matrix are
/// rejected. Throws ParseError / ValidationError with field diagnostics.
MetricLieAlgebra algebra_from_json(const nlohmann::json& doc);

MetricLieAlgebra algebra_from_json_text(std::string_view text);

nlohmann::json algebra_to_json(const MetricLieAlgebra& g);

}  // namespace nilgeo
