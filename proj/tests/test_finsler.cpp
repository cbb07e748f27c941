#include <doctest.h>

#include "nilgeo/catalog.hpp"
#include "nilgeo/connection.hpp"
#include "nilgeo/finsler.hpp"
#include "nilgeo/poly_text.hpp"

using namespace nilgeo;

TEST_CASE("Douglas and parallel-vector spaces match the preset expectations") {
  for (PresetId id : all_presets()) {
    const CatalogEntry entry = build(id);
    CAPTURE(entry.name);
    const ClassificationReport report = classify(entry.algebra);
    REQUIRE(entry.expected.douglas_span.has_value());
    REQUIRE(entry.expected.berwald_span.has_value());
    CHECK(report.douglas.basis_indices == *entry.expected.douglas_span);
    CHECK(report.berwald.basis_indices == *entry.expected.berwald_span);
    CHECK(report.nonranders_douglas_exists == *entry.expected.nonranders_exists);
    CHECK(report.nonranders_douglas_exists == !report.berwald.is_zero());
    // Parallel vectors are always admissible Douglas directions.
    for (int idx : report.berwald.basis_indices) {
      CHECK(report.douglas.contains_axis(idx));
    }
  }
}

TEST_CASE("five-dimensional families admit only the two-dimensional or "
          "three-dimensional Douglas spaces") {
  CHECK(classify(build(PresetId::L57).algebra).douglas.basis_indices ==
        std::vector<int>{0, 1});
  CHECK(classify(build(PresetId::L56).algebra).douglas.basis_indices ==
        std::vector<int>{0, 1});
  CHECK(classify(build(PresetId::L59).algebra).douglas.basis_indices ==
        std::vector<int>{0, 1});
  CHECK(classify(build(PresetId::L55).algebra).douglas.basis_indices ==
        std::vector<int>{0, 1, 2});
}

TEST_CASE("two-step family with a one-dimensional bracket image has parallel vectors") {
  const CatalogEntry entry = build(PresetId::TwostepIII);
  const ClassificationReport report = classify(entry.algebra);
  CHECK(report.berwald.basis_indices == std::vector<int>{3, 4});
  CHECK(report.nonranders_douglas_exists);
  // The symmetric bilinear residuals vanish exactly on the parallel vectors.
  for (int idx : report.berwald.basis_indices) {
    const auto residuals = berwald_symmetric_condition(
        entry.algebra, AlgebraVector::basis(entry.algebra.context(), 5, idx));
    for (const Polynomial& r : residuals) CHECK(r.is_zero());
  }
  // ... and fail on a direction the brackets move.
  const auto bad = berwald_symmetric_condition(
      entry.algebra, AlgebraVector::basis(entry.algebra.context(), 5, 0));
  bool some_nonzero = false;
  for (const Polynomial& r : bad) some_nonzero = some_nonzero || !r.is_zero();
  CHECK(some_nonzero);
}

TEST_CASE("parallel vectors lie in the nullspace of the whole connection") {
  const CatalogEntry entry = build(PresetId::TwostepIII);
  const ConnectionTable conn = koszul_connection(entry.algebra);
  const auto ctx = entry.algebra.context();
  for (int idx : {3, 4}) {
    const AlgebraVector x = AlgebraVector::basis(ctx, 5, idx);
    for (int i = 0; i < 5; ++i) {
      CHECK(nabla(entry.algebra, conn, AlgebraVector::basis(ctx, 5, i), x).is_zero());
    }
  }
}

TEST_CASE("Randers admissibility bound") {
  CHECK(randers_norm_check({Rational(1, 2), Rational(1, 3)}));
  CHECK_FALSE(randers_norm_check({Rational(1), Rational(0)}));
  CHECK_FALSE(randers_norm_check({Rational(4, 5), Rational(4, 5)}));
  CHECK(randers_norm_check({}));
}
