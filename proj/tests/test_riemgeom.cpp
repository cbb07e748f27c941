#include <doctest.h>

#include "nilgeo/catalog.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/connection.hpp"
#include "nilgeo/curvature.hpp"
#include "oracle.hpp"

using namespace nilgeo;

namespace {

oracle::BruteForce instantiate(const CatalogEntry& entry,
                               const std::map<int, Rational>& params) {
  oracle::BruteForce bf(entry.algebra.dim());
  for (const auto& [key, v] : entry.algebra.stored_brackets()) {
    for (int k = 0; k < entry.algebra.dim(); ++k) {
      if (!v.coords[k].is_zero()) {
        bf.set_bracket(key.first, key.second, k, v.coords[k].eval(params));
      }
    }
  }
  bf.compute_connection();
  return bf;
}

}  // namespace

TEST_CASE("symbolic connection and curvature agree with the brute-force oracle") {
  for (PresetId id : all_presets()) {
    const CatalogEntry entry = build(id);
    const ConnectionTable conn = koszul_connection(entry.algebra);
    const CurvatureTensor R = curvature_tensor(entry.algebra, conn);
    const int n = entry.algebra.dim();
    for (unsigned long long seed = 1; seed <= 5; ++seed) {
      const auto params = sample_parameters(entry, seed);
      const auto bf = instantiate(entry, params);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            CHECK(conn.at(i, j).coords[k].eval(params) == bf.gamma[i][j][k]);
          }
        }
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            const AlgebraVector rijk = R.at(i, j, k);
            for (int l = 0; l < n; ++l) {
              CHECK(rijk.coords[l].eval(params) == bf.curvature(i, j, k, l));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("torsion freeness and metric compatibility hold symbolically") {
  for (PresetId id : all_presets()) {
    const CatalogEntry entry = build(id);
    const MetricLieAlgebra& g = entry.algebra;
    const ConnectionTable conn = koszul_connection(g);
    const int n = g.dim();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(conn.at(i, j) - conn.at(j, i) == g.basis_bracket(i, j));
        for (int k = 0; k < n; ++k) {
          // d<E_j,E_k> = 0, so the two connection terms must cancel.
          CHECK((conn.at(i, j).coords[k] + conn.at(i, k).coords[j]).is_zero());
        }
      }
    }
  }
}

TEST_CASE("curvature tensor symmetries hold symbolically") {
  for (PresetId id : all_presets()) {
    const CatalogEntry entry = build(id);
    const MetricLieAlgebra& g = entry.algebra;
    const CurvatureTensor R = curvature_tensor(g, koszul_connection(g));
    const int n = g.dim();
    auto riem = [&](int i, int j, int k, int l) {
      return i == j ? Polynomial(g.context()) : R.at(i, j, k).coords[l];
    };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          // first Bianchi identity
          CHECK((R.at(i, j, k) + R.at(j, k, i) + R.at(k, i, j)).is_zero());
          for (int l = 0; l < n; ++l) {
            CHECK(riem(i, j, k, l) == -riem(j, i, k, l));
            CHECK(riem(i, j, k, l) == -riem(i, j, l, k));
            CHECK(riem(i, j, k, l) == riem(k, l, i, j));
          }
        }
      }
    }
  }
}

TEST_CASE("general-plane sectional curvature matches the basis tables") {
  const CatalogEntry entry = build(PresetId::L57);
  const MetricLieAlgebra& g = entry.algebra;
  const CurvatureTensor R = curvature_tensor(g, koszul_connection(g));
  const CurvatureSummary s = curvature_summary(g, R);
  const auto params = sample_parameters(entry, 11);
  std::vector<Rational> u(5), v(5);
  u[0] = 1;
  v[2] = 1;
  CHECK(sectional_curvature_numeric(g, R, u, v, params) ==
        s.sectional_at(0, 2).eval(params));
  // Scaling the plane basis does not change the curvature.
  std::vector<Rational> u2(5), v2(5);
  u2[0] = Rational(3, 2);
  v2[2] = Rational(-2);
  v2[0] = Rational(5);  // add a u-component: same plane
  CHECK(sectional_curvature_numeric(g, R, u2, v2, params) ==
        s.sectional_at(0, 2).eval(params));
  CHECK_THROWS_AS(sectional_curvature_numeric(g, R, u, u, params), DomainError);
}
