#include <doctest.h>

#include "nilgeo/algebra.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/linalg.hpp"
#include "nilgeo/poly_text.hpp"

using namespace nilgeo;

namespace {

std::vector<std::string> basis(int n) {
  std::vector<std::string> out;
  for (int k = 1; k <= n; ++k) out.push_back("E" + std::to_string(k));
  return out;
}

MetricLieAlgebra heisenberg3(const ContextPtr& ctx) {
  // [E1,E2] = a E3.
  AlgebraVector v = AlgebraVector::zero(ctx, 3);
  v.coords[2] = Polynomial::symbol(ctx, "a");
  return MetricLieAlgebra(ctx, basis(3), {{{0, 1}, v}});
}

}  // namespace

TEST_CASE("bracket is antisymmetric and bilinear") {
  auto ctx = ParamContext::make({"a"}, {"a"});
  const auto g = heisenberg3(ctx);
  const auto e1 = AlgebraVector::basis(ctx, 3, 0);
  const auto e2 = AlgebraVector::basis(ctx, 3, 1);
  CHECK(g.basis_bracket(1, 0) == -g.basis_bracket(0, 1));
  CHECK(g.basis_bracket(2, 2).is_zero());
  CHECK(g.bracket(e1 + e2, e1 + e2).is_zero());
  CHECK(g.bracket(e1 * Rational(3), e2) == g.basis_bracket(0, 1) * Rational(3));
  CHECK(inner(e1, e2).is_zero());
  CHECK(inner(e1 + e2, e1 + e2) == Polynomial::constant(ctx, 2));
}

TEST_CASE("jacobi violation is reported with the offending triple") {
  auto ctx = ParamContext::make({"a"}, {"a"});
  // [E1,E2] = E3, [E1,E3] = E1 breaks Jacobi on (E1,E2,E3).
  AlgebraVector v12 = AlgebraVector::zero(ctx, 3);
  v12.coords[2] = Polynomial::constant(ctx, 1);
  AlgebraVector v13 = AlgebraVector::zero(ctx, 3);
  v13.coords[0] = Polynomial::constant(ctx, 1);
  CHECK_THROWS_WITH_AS(
      MetricLieAlgebra(ctx, basis(3), {{{0, 1}, v12}, {{0, 2}, v13}}),
      "Jacobi identity fails on (E1,E2,E3)", ValidationError);
}

TEST_CASE("derived subalgebra and nilpotency of the Heisenberg algebra") {
  auto ctx = ParamContext::make({"a"}, {"a"});
  const auto g = heisenberg3(ctx);
  const Subspace derived = derived_subalgebra(g);
  CHECK(derived.basis_indices == std::vector<int>{2});
  CHECK(derived.description(g.basis_names()) == "span{E3}");
  CHECK(orthogonal_complement(derived).basis_indices == std::vector<int>{0, 1});
  CHECK(nilpotency_class(g) == 2);
  const auto series = lower_central_series(g);
  REQUIRE(series.size() == 3);
  CHECK(series[0].dim() == 3);
  CHECK(series[1].dim() == 1);
  CHECK(series[2].is_zero());
}

TEST_CASE("non-nilpotent algebras are detected") {
  auto ctx = ParamContext::make({});
  // [E1,E2] = E2 is solvable but not nilpotent.
  AlgebraVector v = AlgebraVector::zero(ctx, 2);
  v.coords[1] = Polynomial::constant(ctx, 1);
  const MetricLieAlgebra g(ctx, basis(2), {{{0, 1}, v}});
  CHECK_THROWS_AS(nilpotency_class(g), NotNilpotent);
}

TEST_CASE("unconstrained parameters make the span indeterminate") {
  auto ctx = ParamContext::make({"a"});  // a carries no sign assumption
  const auto g = heisenberg3(ctx);
  CHECK_THROWS_AS(derived_subalgebra(g), IndeterminatePivot);
}

TEST_CASE("provably nonzero accepts only monomials in positive symbols") {
  auto ctx = ParamContext::make({"a", "b", "c"}, {"a", "b"}, {"c"});
  CHECK(provably_nonzero(poly_from_text(ctx, "-3*a^2*b")));
  CHECK_FALSE(provably_nonzero(poly_from_text(ctx, "a + b")));
  CHECK_FALSE(provably_nonzero(poly_from_text(ctx, "c")));
  CHECK_FALSE(provably_nonzero(poly_from_text(ctx, "0")));
  CHECK(provably_nonzero(poly_from_text(ctx, "5")));
}

TEST_CASE("row span handles rational combinations of stalled rows") {
  // Neither row has a decisive entry alone, but their combinations
  // 2a (col 0) and 2b (col 1) are in the span.
  auto ctx = ParamContext::make({"a", "b"}, {"a", "b"});
  AlgebraVector r1 = AlgebraVector::zero(ctx, 2);
  r1.coords[0] = poly_from_text(ctx, "a");
  r1.coords[1] = poly_from_text(ctx, "b");
  AlgebraVector r2 = AlgebraVector::zero(ctx, 2);
  r2.coords[0] = poly_from_text(ctx, "a");
  r2.coords[1] = poly_from_text(ctx, "-b");
  const Subspace s = coordinate_row_span({r1, r2}, 2);
  CHECK(s.basis_indices == std::vector<int>{0, 1});
}

TEST_CASE("nullspace of coordinate functionals") {
  auto ctx = ParamContext::make({"a"}, {"a"});
  AlgebraVector row = AlgebraVector::zero(ctx, 3);
  row.coords[1] = poly_from_text(ctx, "a^2");
  const Subspace s = coordinate_nullspace({row}, 3);
  CHECK(s.basis_indices == std::vector<int>{0, 2});
}

TEST_CASE("with_context preserves the structure") {
  auto ctx = ParamContext::make({"a"}, {"a"});
  auto wider = ctx->extend({"t"});
  const auto g = heisenberg3(ctx).with_context(wider);
  CHECK(g.context() == wider);
  CHECK(poly_to_text(g.basis_bracket(0, 1).coords[2]) == "a");
}
