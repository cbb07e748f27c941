#include <doctest.h>

#include "nilgeo/catalog.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/geodesic.hpp"
#include "nilgeo/poly_text.hpp"

using namespace nilgeo;

namespace {

// <[Y,E_i],Y> is quadratic in Y, so every equation must scale by t^2 under
// Y -> tY. Checked with a fresh symbol t, not a numeric sample.
void check_quadratic_homogeneity(const GeodesicSystem& sys) {
  auto wide = sys.algebra.context()->extend({"_t"});
  const Polynomial t = Polynomial::symbol(wide, "_t");
  for (const Polynomial& eq : sys.equations) {
    const Polynomial eqw = eq.remapped(wide);
    std::map<int, Polynomial> scaling;
    for (int sym : sys.y_symbols) {
      const int w = wide->index_of(sys.algebra.context()->name(sym));
      scaling[w] = Polynomial::symbol(wide, w) * t;
    }
    CHECK(eqw.substitute(scaling) == eqw * t * t);
  }
}

}  // namespace

TEST_CASE("geodesic-vector equations are quadratic forms in y") {
  for (PresetId id : all_presets()) {
    const CatalogEntry entry = build(id);
    const GeodesicSystem sys = geodesic_system(entry.algebra);
    REQUIRE(static_cast<int>(sys.equations.size()) == entry.algebra.dim());
    check_quadratic_homogeneity(sys);
    // The whole system vanishes on Y = E_n (center direction for all presets).
    std::map<int, Polynomial> center;
    for (size_t k = 0; k + 1 < sys.y_symbols.size(); ++k) {
      center[sys.y_symbols[k]] = Polynomial(entry.algebra.context());
    }
    for (const Polynomial& eq : sys.equations) {
      CHECK(eq.substitute(center).is_zero());
    }
  }
}

TEST_CASE("claimed solution components pass the symbolic verifier") {
  for (PresetId id : all_presets()) {
    const CatalogEntry entry = build(id);
    if (entry.expected.components.empty()) continue;
    const GeodesicSystem sys = geodesic_system(entry.algebra);
    for (const ComponentClaim& claim : entry.expected.components) {
      CAPTURE(entry.name);
      CAPTURE(claim.name);
      CHECK(verify_component(sys, claim));
    }
  }
}

TEST_CASE("the verifier rejects a wrong component") {
  const CatalogEntry entry = build(PresetId::L57);
  const GeodesicSystem sys = geodesic_system(entry.algebra);
  ComponentClaim wrong;
  wrong.name = "wrong";
  wrong.constrained_zero = {4};  // killing only y5 leaves live equations
  CHECK_FALSE(verify_component(sys, wrong));
}

TEST_CASE("scan results are deterministic and fully matched") {
  const CatalogEntry entry = build(PresetId::L59);
  const GeodesicSystem sys = geodesic_system(entry.algebra);
  const auto params = sample_parameters(entry, 17);
  const ScanResult first =
      numeric_component_scan(sys, entry.expected.components, params, 7, 4);
  const ScanResult second =
      numeric_component_scan(sys, entry.expected.components, params, 7, 4);
  CHECK(first.unmatched == 0);
  CHECK_FALSE(first.solutions.empty());
  REQUIRE(first.solutions.size() == second.solutions.size());
  for (size_t k = 0; k < first.solutions.size(); ++k) {
    CHECK(first.solutions[k].point == second.solutions[k].point);
    CHECK(first.solutions[k].matched_claims == second.solutions[k].matched_claims);
  }
  // Every reported point really solves the instantiated system.
  for (const ScanSolution& sol : first.solutions) {
    std::map<int, Rational> binding = params;
    for (size_t k = 0; k < sol.point.size(); ++k) {
      binding[sys.y_symbols[k]] = sol.point[k];
    }
    for (const Polynomial& eq : sys.equations) {
      CHECK(eq.eval(binding) == Rational(0));
    }
  }
}

TEST_CASE("structure constants must not reuse the y symbols") {
  auto ctx = ParamContext::make({"y1"}, {"y1"});
  AlgebraVector v = AlgebraVector::zero(ctx, 2);
  // dim 2 abelian-with-fake-parameter: bracket uses y1 illegally.
  v.coords[1] = Polynomial::symbol(ctx, "y1");
  CHECK_THROWS_AS(
      geodesic_system(MetricLieAlgebra(ctx, {"E1", "E2"}, {{{0, 1}, v}})),
      UsageError);
}
