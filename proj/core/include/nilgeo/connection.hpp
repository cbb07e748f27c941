#pragma once

#include "nilgeo/algebra.hpp"

namespace nilgeo {

/// Levi-Civita connection on basis pairs: entry(i,j) = nabla_{E_i} E_j.
struct ConnectionTable {
  int dim = 0;
  std::vector<AlgebraVector> entries;  // row-major, dim*dim

  const AlgebraVector& at(int i, int j) const { return entries.at(i * dim + j); }
};

/// Koszul formula specialized to left-invariant fields on an orthonormal
/// basis: 2<nabla_{E_i}E_j, E_k> = <[E_i,E_j],E_k> - <[E_j,E_k],E_i>
/// + <[E_k,E_i],E_j>.
ConnectionTable koszul_connection(const MetricLieAlgebra& g);

/// nabla_u v extended bilinearly over polynomial coordinates; coefficients
/// are left-invariant, so they are never differentiated.
AlgebraVector nabla(const MetricLieAlgebra& g, const ConnectionTable& conn,
                    const AlgebraVector& u, const AlgebraVector& v);

}  // namespace nilgeo
