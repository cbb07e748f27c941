#include "nilgeo/render.hpp"

#include "nilgeo/errors.hpp"
#include "nilgeo/poly_text.hpp"

namespace nilgeo {
namespace {

std::string vector_text(const MetricLieAlgebra& g, const AlgebraVector& v) {
  std::string out;
  for (int k = 0; k < g.dim(); ++k) {
    if (v.coords[k].is_zero()) continue;
    if (!out.empty()) out += " | ";
    out += g.basis_names()[k] + ": " + poly_to_text(v.coords[k]);
  }
  return out.empty() ? "0" : out;
}

nlohmann::json vector_json(const MetricLieAlgebra& g, const AlgebraVector& v) {
  nlohmann::json out = nlohmann::json::object();
  for (int k = 0; k < g.dim(); ++k) {
    if (!v.coords[k].is_zero()) out[g.basis_names()[k]] = poly_to_text(v.coords[k]);
  }
  return out;
}

std::string vector_latex(const MetricLieAlgebra& g, const AlgebraVector& v) {
  std::string out;
  for (int k = 0; k < g.dim(); ++k) {
    if (v.coords[k].is_zero()) continue;
    std::string term = poly_to_latex(v.coords[k]);
    if (v.coords[k].terms().size() > 1) term = "\\left(" + term + "\\right)";
    if (!out.empty()) out += " + ";
    out += term + "E_{" + std::to_string(k + 1) + "}";
  }
  return out.empty() ? "0" : out;
}

std::string span_names(const MetricLieAlgebra& g, const Subspace& s) {
  return s.description(g.basis_names());
}

nlohmann::json span_json(const MetricLieAlgebra& g, const Subspace& s) {
  nlohmann::json out = nlohmann::json::array();
  for (int i : s.basis_indices) out.push_back(g.basis_names()[i]);
  return out;
}

std::string latex_table(const std::string& colspec,
                        const std::vector<std::string>& rows) {
  std::string out = "\\begin{tabular}{" + colspec + "}\n";
  for (const auto& row : rows) out += row + " \\\\\n";
  return out + "\\end{tabular}\n";
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "latex") return Format::Latex;
  throw UsageError("unknown format '" + std::string(name) + "'");
}

std::string render_connection(const MetricLieAlgebra& g, const ConnectionTable& conn,
                              Format format) {
  const auto& names = g.basis_names();
  const int n = g.dim();
  if (format == Format::Json) {
    nlohmann::json out = nlohmann::json::object();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out[names[i] + " " + names[j]] = vector_json(g, conn.at(i, j));
      }
    }
    return out.dump(2) + "\n";
  }
  if (format == Format::Latex) {
    std::vector<std::string> rows;
    rows.push_back("$\\nabla$ & pair & value");
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        rows.push_back("$\\nabla_{E_{" + std::to_string(i + 1) + "}}$ & $E_{" +
                       std::to_string(j + 1) + "}$ & $" +
                       vector_latex(g, conn.at(i, j)) + "$");
      }
    }
    return latex_table("lll", rows);
  }
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out += names[i] + " " + names[j] + " = " + vector_text(g, conn.at(i, j)) + "\n";
    }
  }
  return out;
}

std::string render_curvature(const MetricLieAlgebra& g, const CurvatureTensor& R,
                             Format format) {
  const auto& names = g.basis_names();
  const int n = g.dim();
  if (format == Format::Json) {
    nlohmann::json out = nlohmann::json::object();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          out[names[i] + " " + names[j] + " | " + names[k]] =
              vector_json(g, R.at(i, j, k));
        }
      }
    }
    return out.dump(2) + "\n";
  }
  if (format == Format::Latex) {
    std::vector<std::string> rows;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          rows.push_back("$R(E_{" + std::to_string(i + 1) + "},E_{" +
                         std::to_string(j + 1) + "})E_{" + std::to_string(k + 1) +
                         "}$ & $" + vector_latex(g, R.at(i, j, k)) + "$");
        }
      }
    }
    return latex_table("ll", rows);
  }
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        out += names[i] + " " + names[j] + " | " + names[k] + " = " +
               vector_text(g, R.at(i, j, k)) + "\n";
      }
    }
  }
  return out;
}

std::string render_sectional(const MetricLieAlgebra& g, const CurvatureSummary& s,
                             Format format) {
  const auto& names = g.basis_names();
  const int n = g.dim();
  if (format == Format::Json) {
    nlohmann::json out = nlohmann::json::object();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        out[names[i] + " " + names[j]] = poly_to_text(s.sectional_at(i, j));
      }
    }
    return out.dump(2) + "\n";
  }
  if (format == Format::Latex) {
    std::vector<std::string> rows;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        rows.push_back("$K(E_{" + std::to_string(i + 1) + "},E_{" +
                       std::to_string(j + 1) + "})$ & $" +
                       poly_to_latex(s.sectional_at(i, j)) + "$");
      }
    }
    return latex_table("ll", rows);
  }
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out += names[i] + " " + names[j] + " = " + poly_to_text(s.sectional_at(i, j)) + "\n";
    }
  }
  return out;
}

std::string render_ricci(const MetricLieAlgebra& g, const CurvatureSummary& s,
                         Format format) {
  const auto& names = g.basis_names();
  if (format == Format::Json) {
    nlohmann::json out = nlohmann::json::object();
    for (int i = 0; i < g.dim(); ++i) out[names[i]] = poly_to_text(s.ricci_diag[i]);
    return out.dump(2) + "\n";
  }
  if (format == Format::Latex) {
    std::vector<std::string> rows;
    for (int i = 0; i < g.dim(); ++i) {
      rows.push_back("$\\mathrm{Ric}(E_{" + std::to_string(i + 1) + "})$ & $" +
                     poly_to_latex(s.ricci_diag[i]) + "$");
    }
    return latex_table("ll", rows);
  }
  std::string out;
  for (int i = 0; i < g.dim(); ++i) {
    out += names[i] + " = " + poly_to_text(s.ricci_diag[i]) + "\n";
  }
  return out;
}

std::string render_scalar(const MetricLieAlgebra& g, const CurvatureSummary& s,
                          Format format) {
  (void)g;
  if (format == Format::Json) {
    nlohmann::json out = {{"scalar", poly_to_text(s.scalar)}};
    return out.dump(2) + "\n";
  }
  if (format == Format::Latex) {
    return "$S = " + poly_to_latex(s.scalar) + "$\n";
  }
  return "value = " + poly_to_text(s.scalar) + "\n";
}

std::string render_classification(const MetricLieAlgebra& g,
                                  const ClassificationReport& report, Format format) {
  if (format == Format::Json) {
    nlohmann::json out;
    out["douglas_span"] = span_json(g, report.douglas);
    out["berwald_span"] = span_json(g, report.berwald);
    out["nonranders_douglas_exists"] = report.nonranders_douglas_exists;
    out["notes"] = report.notes;
    return out.dump(2) + "\n";
  }
  if (format == Format::Latex) {
    std::vector<std::string> rows;
    rows.push_back("Douglas span & $" + span_names(g, report.douglas) + "$");
    rows.push_back("Berwald span & $" + span_names(g, report.berwald) + "$");
    rows.push_back(std::string("non-Randers Douglas metrics & ") +
                   (report.nonranders_douglas_exists ? "exist" : "do not exist"));
    return latex_table("ll", rows);
  }
  std::string out;
  out += "douglas = " + span_names(g, report.douglas) + "\n";
  out += "berwald = " + span_names(g, report.berwald) + "\n";
  out += std::string("nonranders_douglas = ") +
         (report.nonranders_douglas_exists ? "true" : "false") + "\n";
  for (const auto& note : report.notes) out += "note: " + note + "\n";
  return out;
}

std::string render_geodesic(const GeodesicSystem& sys, Format format) {
  const auto& names = sys.algebra.basis_names();
  if (format == Format::Json) {
    nlohmann::json out = nlohmann::json::object();
    for (int i = 0; i < sys.algebra.dim(); ++i) {
      out[names[i]] = poly_to_text(sys.equations[i]);
    }
    return out.dump(2) + "\n";
  }
  if (format == Format::Latex) {
    std::vector<std::string> rows;
    for (int i = 0; i < sys.algebra.dim(); ++i) {
      rows.push_back("$\\langle [Y,E_{" + std::to_string(i + 1) +
                     "}],Y\\rangle$ & $" + poly_to_latex(sys.equations[i]) + " = 0$");
    }
    return latex_table("ll", rows);
  }
  std::string out;
  for (int i = 0; i < sys.algebra.dim(); ++i) {
    out += names[i] + " = " + poly_to_text(sys.equations[i]) + "\n";
  }
  return out;
}

std::string render_scan(const GeodesicSystem& sys, const ScanResult& scan,
                        Format format) {
  (void)sys;
  if (format == Format::Json) {
    nlohmann::json out;
    nlohmann::json solutions = nlohmann::json::array();
    for (const auto& sol : scan.solutions) {
      nlohmann::json point = nlohmann::json::array();
      for (const auto& c : sol.point) point.push_back(rational_to_string(c));
      solutions.push_back({{"point", point}, {"claims", sol.matched_claims}});
    }
    out["solutions"] = solutions;
    out["unmatched"] = scan.unmatched;
    return out.dump(2) + "\n";
  }
  std::string out;
  for (const auto& sol : scan.solutions) {
    std::string point = "(";
    for (size_t k = 0; k < sol.point.size(); ++k) {
      if (k) point += ", ";
      point += rational_to_string(sol.point[k]);
    }
    point += ")";
    std::string claims;
    for (const auto& name : sol.matched_claims) {
      if (!claims.empty()) claims += ", ";
      claims += name;
    }
    out += point + " -> " + (claims.empty() ? "UNMATCHED" : claims) + "\n";
  }
  out += "unmatched = " + std::to_string(scan.unmatched) + "\n";
  return out;
}

std::string render_scurvature(const SCurvExpression& expr, Format format) {
  if (format == Format::Json) {
    nlohmann::json out;
    out["scale"] = rational_to_string(expr.scale);
    out["numerator"] = poly_to_text(expr.numerator);
    out["correction"] = poly_to_text(expr.correction);
    out["reduced"] = expr.reduced;
    return out.dump(2) + "\n";
  }
  if (format == Format::Latex) {
    std::string out = "$S(Y) = " + rational_to_string(expr.scale) +
                      "\\left\\{\\frac{" + poly_to_latex(expr.numerator) + "}{F(Y)}";
    if (!expr.correction.is_zero()) {
      out += " - \\left(" + poly_to_latex(expr.correction) + "\\right)";
    }
    return out + "\\right\\}$\n";
  }
  std::string out;
  out += "scale = " + rational_to_string(expr.scale) + "\n";
  out += "numerator = " + poly_to_text(expr.numerator) + "\n";
  out += "correction = " + poly_to_text(expr.correction) + "\n";
  out += std::string("reduced = ") + (expr.reduced ? "true" : "false") + "\n";
  return out;
}

std::string render_checks(const std::vector<CheckResult>& checks, Format format) {
  if (format == Format::Json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& check : checks) {
      out.push_back({{"name", check.name}, {"ok", check.ok}, {"detail", check.detail}});
    }
    return out.dump(2) + "\n";
  }
  std::string out;
  for (const auto& check : checks) {
    out += std::string(check.ok ? "PASS" : "FAIL") + " " + check.name;
    if (!check.ok && !check.detail.empty()) out += " (" + check.detail + ")";
    out += "\n";
  }
  return out;
}

}  // namespace nilgeo
