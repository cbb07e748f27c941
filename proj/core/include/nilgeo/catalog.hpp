#pragma once

#include <optional>

#include "nilgeo/algebra.hpp"
#include "nilgeo/geodesic.hpp"

namespace nilgeo {

enum class PresetId { L57, L56, L55, L59, TwostepI, TwostepII, TwostepIII };

std::vector<PresetId> all_presets();
std::string preset_name(PresetId id);
/// Throws UsageError for an unknown name.
PresetId parse_preset(std::string_view name);

/// Expected results parsed from the bundled data files.
struct ExpectedBundle {
  int nilpotency = -1;
  /// nabla_{E_i}E_j keyed by (i,j); empty when the file has no table.
  std::map<std::pair<int, int>, AlgebraVector> connection;
  /// R(E_i,E_j)E_k keyed by ((i,j),k), i < j.
  std::map<std::pair<std::pair<int, int>, int>, AlgebraVector> curvature;
  std::map<std::pair<int, int>, Polynomial> sectional;
  std::vector<Polynomial> ricci;
  std::optional<Polynomial> scalar;
  std::optional<std::vector<int>> douglas_span;
  std::optional<std::vector<int>> berwald_span;
  std::optional<bool> nonranders_exists;
  std::vector<Polynomial> geodesic;             // one row per basis vector
  std::map<int, Polynomial> geodesic_variant;   // rows that differ in print
  std::vector<ComponentClaim> components;
  std::optional<AlgebraVector> scurv_x;
  std::optional<Polynomial> scurv_numerator;
};

struct CatalogEntry {
  PresetId id;
  int regime = 1;
  std::string name;
  MetricLieAlgebra algebra;
  ExpectedBundle expected;
};

/// Builds a preset algebra together with its expected results. The context
/// registers the structure parameters, y1..y5 and l1..l5. l59 has a second
/// regime with m = 0 and the two lower weights equal.
CatalogEntry build(PresetId id, int regime = 1);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Recomputes everything the expected bundle pins down and compares
/// exactly, plus internal consistency checks.
std::vector<CheckResult> regression_bundle(const CatalogEntry& entry);

/// Random rational parameter values satisfying the preset's assumptions.
std::map<int, Rational> sample_parameters(const CatalogEntry& entry,
                                          unsigned long long seed);

}  // namespace nilgeo
