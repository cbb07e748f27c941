#include <doctest.h>
#include <nlohmann/json.hpp>

#include "nilgeo/catalog.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/io.hpp"
#include "nilgeo/poly_text.hpp"

using namespace nilgeo;
using nlohmann::json;

namespace {

const char* kHeisenberg = R"({
  "dim": 3,
  "basis": ["E1", "E2", "E3"],
  "params": {"positive": ["a"]},
  "brackets": [{"i": 1, "j": 2, "value": {"E3": "a"}}]
})";

}  // namespace

TEST_CASE("algebra documents parse and round-trip") {
  const MetricLieAlgebra g = algebra_from_json_text(kHeisenberg);
  CHECK(g.dim() == 3);
  CHECK(poly_to_text(g.basis_bracket(0, 1).coords[2]) == "a");
  CHECK(g.basis_bracket(0, 2).is_zero());
  const MetricLieAlgebra again = algebra_from_json(algebra_to_json(g));
  CHECK(again.dim() == 3);
  CHECK(algebra_to_json(again) == algebra_to_json(g));
}

TEST_CASE("preset algebras survive a JSON round trip") {
  for (PresetId id : all_presets()) {
    const CatalogEntry entry = build(id);
    const MetricLieAlgebra back = algebra_from_json(algebra_to_json(entry.algebra));
    REQUIRE(back.dim() == entry.algebra.dim());
    for (int i = 0; i < back.dim(); ++i) {
      for (int j = i + 1; j < back.dim(); ++j) {
        const AlgebraVector lhs = back.basis_bracket(i, j);
        const AlgebraVector rhs = entry.algebra.basis_bracket(i, j);
        for (int k = 0; k < back.dim(); ++k) {
          CHECK(poly_to_text(lhs.coords[k]) == poly_to_text(rhs.coords[k]));
        }
      }
    }
  }
}

TEST_CASE("parse errors point at the offending field") {
  auto expect_error = [](const char* text, const char* needle) {
    try {
      algebra_from_json_text(text);
      FAIL_CHECK("expected a ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error(R"({"basis": ["E1"], "brackets": []})", "dim");
  expect_error(R"({"dim": 2, "basis": ["E1"], "brackets": []})", "basis");
  expect_error(
      R"({"dim": 2, "basis": ["E1","E2"],
          "brackets": [{"i": 2, "j": 1, "value": {}}]})",
      "brackets[0]");
  expect_error(
      R"({"dim": 2, "basis": ["E1","E2"],
          "brackets": [{"i": 1, "j": 3, "value": {}}]})",
      "brackets[0]");
  expect_error("not json at all", "");
}

TEST_CASE("documents carrying a metric matrix are rejected") {
  CHECK_THROWS_AS(algebra_from_json_text(R"({
    "dim": 2, "basis": ["E1","E2"], "brackets": [],
    "gram": [[1,0],[0,2]]
  })"), ParseError);
  CHECK_THROWS_AS(algebra_from_json_text(R"({
    "dim": 2, "basis": ["E1","E2"], "brackets": [],
    "metric": "diag"
  })"), ParseError);
}

TEST_CASE("non-Lie structure constants are rejected on load") {
  CHECK_THROWS_AS(algebra_from_json_text(R"({
    "dim": 3, "basis": ["E1","E2","E3"],
    "brackets": [
      {"i": 1, "j": 2, "value": {"E3": "1"}},
      {"i": 1, "j": 3, "value": {"E1": "1"}}
    ]
  })"), ValidationError);
}

TEST_CASE("symbols are collected from assumptions and bracket entries") {
  const MetricLieAlgebra g = algebra_from_json_text(R"({
    "dim": 3, "basis": ["E1","E2","E3"],
    "params": {"positive": ["a"], "nonneg": ["b"]},
    "brackets": [{"i": 1, "j": 2, "value": {"E3": "a + b*c"}}]
  })");
  const auto& ctx = g.context();
  CHECK(ctx->find("a") >= 0);
  CHECK(ctx->find("b") >= 0);
  CHECK(ctx->find("c") >= 0);
  CHECK(ctx->is_positive(ctx->index_of("a")));
  CHECK(ctx->is_nonneg(ctx->index_of("b")));
  CHECK_FALSE(ctx->is_positive(ctx->index_of("c")));
}
