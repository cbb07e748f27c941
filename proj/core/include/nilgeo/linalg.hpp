#pragma once

#include <vector>

#include "nilgeo/algebra.hpp"

namespace nilgeo {

/// True when the polynomial is a single term with nonzero rational
/// coefficient whose symbols are all declared positive, so it cannot vanish
/// anywhere on the assumed parameter domain.
bool provably_nonzero(const Polynomial& p);

/// Row span of parametric vectors, reduced by cross-multiplication with
/// provably nonzero pivots. Throws IndeterminatePivot when elimination hits
/// an entry the assumptions cannot decide, and when the span is not a
/// coordinate subspace.
Subspace coordinate_row_span(const std::vector<AlgebraVector>& rows, int ambient);

/// Nullspace {x : row . x = 0 for every row}, under the same discipline.
Subspace coordinate_nullspace(const std::vector<AlgebraVector>& rows, int ambient);

}  // namespace nilgeo
