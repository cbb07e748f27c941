#include "nilgeo/finsler.hpp"

#include "nilgeo/linalg.hpp"

namespace nilgeo {

Subspace douglas_space(const MetricLieAlgebra& g) {
  return orthogonal_complement(derived_subalgebra(g));
}

Subspace berwald_space(const MetricLieAlgebra& g, const ConnectionTable& conn) {
  const int n = g.dim();
  // nabla_{E_i} X = 0, coordinate k: sum_j x_j <nabla_{E_i}E_j, E_k> = 0.
  std::vector<AlgebraVector> rows;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      AlgebraVector row = AlgebraVector::zero(g.context(), n);
      bool nonzero = false;
      for (int j = 0; j < n; ++j) {
        row.coords[j] = conn.at(i, j).coords[k];
        nonzero = nonzero || !row.coords[j].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return coordinate_nullspace(rows, n);
}

ClassificationReport classify(const MetricLieAlgebra& g) {
  ClassificationReport report;
  report.douglas = douglas_space(g);
  report.berwald = berwald_space(g, koszul_connection(g));
  report.nonranders_douglas_exists = !report.berwald.is_zero();
  report.notes.push_back(
      "Douglas metrics split into Randers metrics built from X orthogonal to "
      "the derived subalgebra and Berwald metrics built from a parallel X.");
  report.notes.push_back(
      "Randers-type choices additionally require the admissibility bound "
      "||X|| < 1 in the underlying inner product.");
  if (report.berwald.is_zero()) {
    report.notes.push_back(
        "No nonzero parallel vector exists, so every Douglas metric here is "
        "of Randers type.");
  } else {
    report.notes.push_back("Parallel vectors in " +
                           report.berwald.description(g.basis_names()) +
                           " yield Douglas metrics of non-Randers (Berwald) type.");
  }
  return report;
}

bool randers_norm_check(const std::vector<Rational>& x) {
  Rational norm2(0);
  for (const auto& xi : x) norm2 += xi * xi;
  return norm2 < 1;
}

std::vector<Polynomial> berwald_symmetric_condition(const MetricLieAlgebra& g,
                                                    const AlgebraVector& x) {
  const int n = g.dim();
  std::vector<Polynomial> out;
  for (int i = 0; i < n; ++i) {
    const AlgebraVector ei = AlgebraVector::basis(g.context(), n, i);
    for (int j = i; j < n; ++j) {
      const AlgebraVector ej = AlgebraVector::basis(g.context(), n, j);
      out.push_back(g.bracket(x, ei).coords[j] + g.bracket(x, ej).coords[i]);
    }
  }
  return out;
}

}  // namespace nilgeo
