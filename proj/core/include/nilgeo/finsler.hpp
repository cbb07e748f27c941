#pragma once

#include "nilgeo/connection.hpp"

namespace nilgeo {

/// Vectors X for which every (alpha,beta)-metric built from <.,.> and
/// beta = <X,.> is of Douglas type: the orthogonal complement of the
/// derived subalgebra.
Subspace douglas_space(const MetricLieAlgebra& g);

/// Parallel vectors: solutions of nabla_{E_i} X = 0 for every i.
Subspace berwald_space(const MetricLieAlgebra& g, const ConnectionTable& conn);

struct ClassificationReport {
  Subspace douglas;
  Subspace berwald;
  /// True iff a nonzero parallel X exists, so non-Randers Douglas metrics
  /// (the Berwald branch of the dichotomy) are realizable.
  bool nonranders_douglas_exists = false;
  std::vector<std::string> notes;
};

ClassificationReport classify(const MetricLieAlgebra& g);

/// True when sum x_i^2 < 1, the Randers admissibility bound ||X||_alpha < 1.
bool randers_norm_check(const std::vector<Rational>& x);

/// Residuals <[x,E_i],E_j> + <[x,E_j],E_i> over i <= j; all zero iff X is
/// parallel for the bi-invariant-style symmetric condition.
std::vector<Polynomial> berwald_symmetric_condition(const MetricLieAlgebra& g,
                                                    const AlgebraVector& x);

}  // namespace nilgeo
