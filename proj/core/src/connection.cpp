#include "nilgeo/connection.hpp"

#include "nilgeo/errors.hpp"

namespace nilgeo {

ConnectionTable koszul_connection(const MetricLieAlgebra& g) {
  const int n = g.dim();
  const auto& ctx = g.context();
  ConnectionTable table;
  table.dim = n;
  table.entries.reserve(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const AlgebraVector bij = g.basis_bracket(i, j);
      AlgebraVector out = AlgebraVector::zero(ctx, n);
      for (int k = 0; k < n; ++k) {
        const Polynomial coord =
            (bij.coords[k] - g.basis_bracket(j, k).coords[i] + g.basis_bracket(k, i).coords[j]) *
            Rational(1, 2);
        out.coords[k] = coord;
      }
      table.entries.push_back(std::move(out));
    }
  }
  return table;
}

AlgebraVector nabla(const MetricLieAlgebra& g, const ConnectionTable& conn,
                    const AlgebraVector& u, const AlgebraVector& v) {
  const int n = g.dim();
  if (u.dim() != n || v.dim() != n || conn.dim != n) {
    throw UsageError("dimension mismatch in covariant derivative");
  }
  AlgebraVector out = AlgebraVector::zero(g.context(), n);
  for (int i = 0; i < n; ++i) {
    if (u.coords[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (v.coords[j].is_zero()) continue;
      out = out + conn.at(i, j).scaled(u.coords[i] * v.coords[j]);
    }
  }
  return out;
}

}  // namespace nilgeo
