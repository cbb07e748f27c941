#include <cmath>

#include <doctest.h>

#include "nilgeo/catalog.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/finsler.hpp"
#include "nilgeo/poly_text.hpp"
#include "nilgeo/s_curvature.hpp"

using namespace nilgeo;

namespace {

AlgebraVector symbolic_y(const GeodesicSystem& sys) {
  AlgebraVector y = AlgebraVector::zero(sys.algebra.context(), sys.algebra.dim());
  for (int k = 0; k < sys.algebra.dim(); ++k) {
    y.coords[k] = Polynomial::symbol(sys.algebra.context(), sys.y_symbols[k]);
  }
  return y;
}

}  // namespace

TEST_CASE("reduced numerators match the catalog expectations") {
  for (PresetId id : {PresetId::L57, PresetId::L56, PresetId::L55, PresetId::L59}) {
    const CatalogEntry entry = build(id);
    CAPTURE(entry.name);
    REQUIRE(entry.expected.scurv_x.has_value());
    REQUIRE(entry.expected.scurv_numerator.has_value());
    const SCurvExpression expr =
        s_curvature(entry.algebra, *entry.expected.scurv_x);
    CHECK(expr.reduced);
    CHECK(expr.correction.is_zero());
    CHECK(expr.numerator == *entry.expected.scurv_numerator);
    CHECK(expr.scale == Rational(entry.algebra.dim() + 1, 2));
  }
}

TEST_CASE("reduced and full numerators agree when the correction vanishes") {
  for (PresetId id : all_presets()) {
    const CatalogEntry entry = build(id);
    const MetricLieAlgebra& g = entry.algebra;
    const GeodesicSystem sys = geodesic_system(g);
    const AlgebraVector y = symbolic_y(sys);
    const Subspace douglas = douglas_space(g);
    AlgebraVector x = AlgebraVector::zero(g.context(), g.dim());
    for (int idx : douglas.basis_indices) {
      x.coords[idx] = Polynomial::symbol(
          g.context(), "l" + std::to_string(idx + 1));
    }
    const Polynomial correction = inner(g.bracket(x, y), x);
    CHECK(correction.is_zero());
    const Polynomial reduced = inner(g.bracket(y, x), y);
    const Polynomial full =
        inner(g.bracket(x, y), x.scaled(inner(y, x)) - y);
    CHECK(full == reduced);
    CHECK(s_curvature(g, x).numerator == reduced);
  }
}

TEST_CASE("the full form is used for directions outside the Douglas space") {
  const CatalogEntry entry = build(PresetId::L57);
  const MetricLieAlgebra& g = entry.algebra;
  const AlgebraVector x = AlgebraVector::basis(g.context(), 5, 2);  // E3
  const SCurvExpression expr = s_curvature(g, x);
  CHECK_FALSE(expr.reduced);
  const GeodesicSystem sys = geodesic_system(g);
  const AlgebraVector y = symbolic_y(sys);
  CHECK(expr.numerator == inner(g.bracket(x, y), x.scaled(inner(y, x)) - y));
  CHECK(expr.correction == inner(g.bracket(x, y), x));
}

TEST_CASE("evaluation is exact on rational-norm directions") {
  const CatalogEntry entry = build(PresetId::L59);
  const SCurvExpression expr = s_curvature(entry.algebra, *entry.expected.scurv_x);
  std::map<int, Rational> b = sample_parameters(entry, 5);
  const auto ctx = expr.algebra.context();
  // X = (3/5) E1, Y = 3 E1 + 4 E2: <Y,Y> = 25 is a perfect square.
  b[ctx->index_of("l1")] = Rational(3, 5);
  b[ctx->index_of("l2")] = Rational(0);
  b[expr.y_symbols[0]] = Rational(3);
  b[expr.y_symbols[1]] = Rational(4);
  for (int k = 2; k < 5; ++k) b[expr.y_symbols[k]] = Rational(0);
  const SCurvValue v = s_curvature_eval(expr, b);
  CHECK(v.exact);
  const Rational num = expr.numerator.eval(b);
  // F(Y) = 5 + <X,Y> = 5 + 9/5.
  CHECK(v.value == expr.scale * num / Rational(34, 5));
}

TEST_CASE("evaluation encloses irrational values tightly") {
  const CatalogEntry entry = build(PresetId::L57);
  const SCurvExpression expr = s_curvature(entry.algebra, *entry.expected.scurv_x);
  std::map<int, Rational> b = sample_parameters(entry, 9);
  const auto ctx = expr.algebra.context();
  b[ctx->index_of("l1")] = Rational(1, 2);
  b[ctx->index_of("l2")] = Rational(1, 3);
  b[expr.y_symbols[0]] = Rational(1);
  b[expr.y_symbols[1]] = Rational(1);
  for (int k = 2; k < 5; ++k) b[expr.y_symbols[k]] = Rational(1);
  const SCurvValue v = s_curvature_eval(expr, b);
  CHECK_FALSE(v.exact);
  CHECK(v.hi - v.lo <= Rational(1, 1000000000000LL));
  // Cross-check against floating point within the interval width.
  const double num = static_cast<double>(expr.numerator.eval(b));
  const double xy = static_cast<double>(b[ctx->index_of("l1")] +
                                        b[ctx->index_of("l2")]);
  const double approx =
      static_cast<double>(expr.scale) * num / (std::sqrt(5.0) + xy);
  CHECK(static_cast<double>(v.lo) <= approx + 1e-9);
  CHECK(approx - 1e-9 <= static_cast<double>(v.hi));
}

TEST_CASE("degenerate inputs are rejected") {
  const CatalogEntry entry = build(PresetId::L57);
  const SCurvExpression expr = s_curvature(entry.algebra, *entry.expected.scurv_x);
  std::map<int, Rational> b = sample_parameters(entry, 3);
  const auto ctx = expr.algebra.context();
  b[ctx->index_of("l1")] = Rational(1, 2);
  b[ctx->index_of("l2")] = Rational(0);
  for (int k = 0; k < 5; ++k) b[expr.y_symbols[k]] = Rational(0);
  CHECK_THROWS_AS(s_curvature_eval(expr, b), DomainError);  // Y = 0
  b[expr.y_symbols[0]] = Rational(1);
  b[ctx->index_of("l1")] = Rational(1);
  CHECK_THROWS_AS(s_curvature_eval(expr, b), DomainError);  // ||X|| = 1
}
