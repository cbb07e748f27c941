#pragma once

#include <map>

#include "nilgeo/connection.hpp"

namespace nilgeo {

/// R(E_i,E_j)E_k for i < j, stored as one vector of dim entries per pair.
struct CurvatureTensor {
  int dim = 0;
  std::map<std::pair<int, int>, std::vector<AlgebraVector>> entries;

  /// R(E_i,E_j)E_k for any i, j (antisymmetric in the first two slots).
  AlgebraVector at(int i, int j, int k) const;
};

/// Convention: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
/// - nabla_{[X,Y]} Z.
CurvatureTensor curvature_tensor(const MetricLieAlgebra& g, const ConnectionTable& conn);

struct CurvatureSummary {
  int dim = 0;
  std::vector<Polynomial> sectional;  // row-major dim*dim, K(E_i,E_j)
  std::vector<Polynomial> ricci_diag;
  Polynomial scalar;

  const Polynomial& sectional_at(int i, int j) const { return sectional.at(i * dim + j); }
};

/// K(E_i,E_j) = <R(E_i,E_j)E_j, E_i>; Ric(E_i) = sum_j K(E_i,E_j);
/// scalar = sum_i Ric(E_i).
CurvatureSummary curvature_summary(const MetricLieAlgebra& g, const CurvatureTensor& R);

/// Sectional curvature of the plane span{u,v} at a numeric instance, as an
/// exact rational: <R(u,v)v,u> / (|u|^2 |v|^2 - <u,v>^2). Throws DomainError
/// when u, v are linearly dependent.
Rational sectional_curvature_numeric(const MetricLieAlgebra& g, const CurvatureTensor& R,
                                     const std::vector<Rational>& u,
                                     const std::vector<Rational>& v,
                                     const std::map<int, Rational>& params);

}  // namespace nilgeo
