#pragma once

#include <optional>
#include <set>
#include <string>

#include "nilgeo/algebra.hpp"

namespace nilgeo {

/// The system <[Y,E_i],Y> = 0 in y_1..y_n whose solutions are the geodesic
/// vectors of the left-invariant metric.
struct GeodesicSystem {
  MetricLieAlgebra algebra;
  std::vector<int> y_symbols;          // symbol index of y_k, by coordinate
  std::vector<Polynomial> equations;   // one per basis vector
};

/// Builds the system. Registers y1..yn in the context when absent; the
/// structure constants must not involve them.
GeodesicSystem geodesic_system(const MetricLieAlgebra& g);

/// A claimed solution component: coordinates forced to zero plus extra
/// polynomial relations that cut it out inside the coordinate subspace.
struct ComponentClaim {
  std::string name;
  std::set<int> constrained_zero;      // 0-based coordinate indices
  std::vector<Polynomial> extra_relations;
};

/// Substitutes the zero constraints; every reduced equation must be
/// identically zero or a rational multiple of one reduced extra relation.
bool verify_component(const GeodesicSystem& system, const ComponentClaim& claim);

struct ScanSolution {
  std::vector<Rational> point;         // first nonzero coordinate is 1
  std::vector<std::string> matched_claims;
};

struct ScanResult {
  std::vector<ScanSolution> solutions;
  int unmatched = 0;
};

/// Instantiates the structure parameters and hunts for exact rational
/// solutions: random sampling on every coordinate subspace plus
/// one-variable elimination with exact quadratic root finding. Solutions
/// are deduplicated projectively and tagged by the claims they satisfy.
ScanResult numeric_component_scan(const GeodesicSystem& system,
                                  const std::vector<ComponentClaim>& claims,
                                  const std::map<int, Rational>& params,
                                  unsigned long long seed, int samples);

}  // namespace nilgeo
