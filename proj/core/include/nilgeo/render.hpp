#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "nilgeo/catalog.hpp"
#include "nilgeo/connection.hpp"
#include "nilgeo/curvature.hpp"
#include "nilgeo/finsler.hpp"
#include "nilgeo/geodesic.hpp"
#include "nilgeo/s_curvature.hpp"

namespace nilgeo {

enum class Format { Text, Json, Latex };

/// Accepts "text", "json", "latex"; throws UsageError otherwise.
Format parse_format(std::string_view name);

std::string render_connection(const MetricLieAlgebra& g, const ConnectionTable& conn,
                              Format format);
std::string render_curvature(const MetricLieAlgebra& g, const CurvatureTensor& R,
                             Format format);
std::string render_sectional(const MetricLieAlgebra& g, const CurvatureSummary& s,
                             Format format);
std::string render_ricci(const MetricLieAlgebra& g, const CurvatureSummary& s,
                         Format format);
std::string render_scalar(const MetricLieAlgebra& g, const CurvatureSummary& s,
                          Format format);
std::string render_classification(const MetricLieAlgebra& g,
                                  const ClassificationReport& report, Format format);
std::string render_geodesic(const GeodesicSystem& sys, Format format);
std::string render_scan(const GeodesicSystem& sys, const ScanResult& scan, Format format);
std::string render_scurvature(const SCurvExpression& expr, Format format);
std::string render_checks(const std::vector<CheckResult>& checks, Format format);

}  // namespace nilgeo
