#pragma once

#include "nilgeo/algebra.hpp"

namespace nilgeo {

/// S(Y) = scale * ( numerator / F(Y) - correction ) with
/// F(Y) = sqrt(<Y,Y>) + <X,Y>. F is kept symbolic; no polynomial division
/// happens. In the reduced case (X orthogonal to the derived subalgebra)
/// numerator = <[Y,X],Y> and correction is identically zero.
struct SCurvExpression {
  MetricLieAlgebra algebra;
  std::vector<int> y_symbols;
  AlgebraVector x;
  Polynomial numerator;
  Rational scale;        // (n+1)/2
  Polynomial correction; // <[X,Y],X>
  bool reduced = false;
};

/// Builds the expression for the Randers metric defined by X. Picks the
/// reduced form when every coordinate of X outside the orthogonal
/// complement of the derived subalgebra is zero.
SCurvExpression s_curvature(const MetricLieAlgebra& g, const AlgebraVector& x);

struct SCurvValue {
  bool exact = false;
  Rational value;      // set when exact
  Rational lo, hi;     // enclosure otherwise, width <= 1e-12
};

/// Evaluates at a full rational binding of parameters, y, and the X
/// coordinates. Exact when sqrt(<Y,Y>) is rational, otherwise a rational
/// interval enclosure. Throws DomainError for Y = 0 or ||X|| >= 1.
SCurvValue s_curvature_eval(const SCurvExpression& expr,
                            const std::map<int, Rational>& bindings);

}  // namespace nilgeo
