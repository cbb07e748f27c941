#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "nilgeo/polynomial.hpp"

namespace nilgeo {

/// Deterministic plain-text form, terms in descending graded-lex order,
/// e.g. "-3/4*a^2 + 1/2*a*b". Zero renders as "0".
std::string poly_to_text(const Polynomial& p);

/// Parses sums/products/powers of rationals and registered symbols, with
/// parentheses. Throws ParseError with position info on malformed input.
Polynomial poly_from_text(ContextPtr ctx, std::string_view text);

/// Structured form: list of {"coeff": "p/q", "monomial": {symbol: exp}}.
nlohmann::json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(ContextPtr ctx, const nlohmann::json& j);

/// LaTeX rendering, e.g. "-\frac{3}{4}a^{2} + \frac{1}{2}ab".
std::string poly_to_latex(const Polynomial& p);

}  // namespace nilgeo
