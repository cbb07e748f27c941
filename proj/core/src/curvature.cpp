#include "nilgeo/curvature.hpp"

#include "nilgeo/errors.hpp"

namespace nilgeo {

AlgebraVector CurvatureTensor::at(int i, int j, int k) const {
  if (i == j) {
    const auto& any = entries.begin()->second.front();
    return AlgebraVector::zero(any.coords.front().context(), dim);
  }
  const bool flip = i > j;
  const auto it = entries.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == entries.end()) throw UsageError("curvature index out of range");
  return flip ? -it->second.at(k) : it->second.at(k);
}

CurvatureTensor curvature_tensor(const MetricLieAlgebra& g, const ConnectionTable& conn) {
  const int n = g.dim();
  CurvatureTensor R;
  R.dim = n;
  for (int i = 0; i < n; ++i) {
    const AlgebraVector ei = AlgebraVector::basis(g.context(), n, i);
    for (int j = i + 1; j < n; ++j) {
      const AlgebraVector ej = AlgebraVector::basis(g.context(), n, j);
      std::vector<AlgebraVector> column;
      column.reserve(n);
      for (int k = 0; k < n; ++k) {
        const AlgebraVector ek = AlgebraVector::basis(g.context(), n, k);
        column.push_back(nabla(g, conn, ei, nabla(g, conn, ej, ek)) -
                         nabla(g, conn, ej, nabla(g, conn, ei, ek)) -
                         nabla(g, conn, g.basis_bracket(i, j), ek));
      }
      R.entries.emplace(std::make_pair(i, j), std::move(column));
    }
  }
  return R;
}

CurvatureSummary curvature_summary(const MetricLieAlgebra& g, const CurvatureTensor& R) {
  const int n = g.dim();
  CurvatureSummary out;
  out.dim = n;
  out.sectional.assign(n * n, Polynomial(g.context()));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Polynomial k = R.at(i, j, j).coords[i];
      out.sectional[i * n + j] = k;
      out.sectional[j * n + i] = k;
    }
  }
  out.ricci_diag.assign(n, Polynomial(g.context()));
  out.scalar = Polynomial(g.context());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.ricci_diag[i] += out.sectional[i * n + j];
    out.scalar += out.ricci_diag[i];
  }
  return out;
}

Rational sectional_curvature_numeric(const MetricLieAlgebra& g, const CurvatureTensor& R,
                                     const std::vector<Rational>& u,
                                     const std::vector<Rational>& v,
                                     const std::map<int, Rational>& params) {
  const int n = g.dim();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n) {
    throw UsageError("plane vectors must have algebra dimension");
  }
  // <R(u,v)v,u> by quadrilinearity over the basis tensor.
  Rational numer(0), uu(0), vv(0), uv(0);
  for (int i = 0; i < n; ++i) {
    uu += u[i] * u[i];
    vv += v[i] * v[i];
    uv += u[i] * v[i];
    for (int j = 0; j < n; ++j) {
      if (i == j || u[i] * v[j] == 0) continue;
      for (int k = 0; k < n; ++k) {
        if (v[k] == 0) continue;
        const AlgebraVector rijk = R.at(i, j, k);
        for (int l = 0; l < n; ++l) {
          if (u[l] == 0 || rijk.coords[l].is_zero()) continue;
          numer += u[i] * v[j] * v[k] * u[l] * rijk.coords[l].eval(params);
        }
      }
    }
  }
  const Rational denom = uu * vv - uv * uv;
  if (denom == 0) throw DomainError("plane vectors are linearly dependent");
  return numer / denom;
}

}  // namespace nilgeo
