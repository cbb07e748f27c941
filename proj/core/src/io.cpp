#include "nilgeo/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "nilgeo/errors.hpp"
#include "nilgeo/poly_text.hpp"

namespace nilgeo {
namespace {

std::vector<std::string> string_list(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("'" + field + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError("'" + field + "' must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

// Identifiers occurring in a polynomial string, in appearance order.
void collect_identifiers(const std::string& text, std::vector<std::string>& out,
                         std::set<std::string>& seen) {
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_')) {
        ++j;
      }
      std::string name = text.substr(i, j - i);
      if (seen.insert(name).second) out.push_back(std::move(name));
      i = j;
    } else {
      ++i;
    }
  }
}

}  // namespace

MetricLieAlgebra algebra_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
  if (doc.contains("gram") || doc.contains("metric")) {
    throw ParseError("only the orthonormal metric is supported; remove 'gram'/'metric'");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw ParseError("missing integer field 'dim'");
  }
  const int n = doc["dim"].get<int>();
  if (n <= 0) throw ParseError("'dim' must be positive");

  if (!doc.contains("basis")) throw ParseError("missing field 'basis'");
  const auto basis = string_list(doc["basis"], "basis");
  if (static_cast<int>(basis.size()) != n) {
    throw ParseError("'basis' must list exactly dim names");
  }

  std::vector<std::string> positive, nonneg, symbols;
  if (doc.contains("params")) {
    const auto& params = doc["params"];
    if (!params.is_object()) throw ParseError("'params' must be an object");
    if (params.contains("positive")) positive = string_list(params["positive"], "positive");
    if (params.contains("nonneg")) nonneg = string_list(params["nonneg"], "nonneg");
    if (params.contains("symbols")) symbols = string_list(params["symbols"], "symbols");
  }

  std::set<std::string> basis_set(basis.begin(), basis.end());
  if (symbols.empty()) {
    std::set<std::string> seen;
    for (const auto& name : positive) {
      if (seen.insert(name).second) symbols.push_back(name);
    }
    for (const auto& name : nonneg) {
      if (seen.insert(name).second) symbols.push_back(name);
    }
    if (doc.contains("brackets")) {
      for (const auto& entry : doc["brackets"]) {
        if (entry.contains("value") && entry["value"].is_object()) {
          for (const auto& [key, poly] : entry["value"].items()) {
            if (poly.is_string()) {
              std::vector<std::string> found;
              collect_identifiers(poly.get<std::string>(), found, seen);
              for (auto& name : found) {
                if (!basis_set.count(name)) symbols.push_back(name);
              }
            }
          }
        }
      }
    }
  }
  const ContextPtr ctx = ParamContext::make(symbols, positive, nonneg);

  std::map<std::pair<int, int>, AlgebraVector> brackets;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw ParseError("'brackets' must be an array");
    int index = 0;
    for (const auto& entry : doc["brackets"]) {
      const std::string where = "brackets[" + std::to_string(index++) + "]";
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
          !entry.contains("value")) {
        throw ParseError(where + " must have fields 'i', 'j', 'value'");
      }
      const int i = entry["i"].get<int>(), j = entry["j"].get<int>();
      if (i < 1 || i > n || j < 1 || j > n) {
        throw ParseError(where + ": indices are 1-based and must be in 1.." +
                         std::to_string(n));
      }
      if (i >= j) throw ParseError(where + ": requires i < j");
      AlgebraVector v = AlgebraVector::zero(ctx, n);
      for (const auto& [name, poly] : entry["value"].items()) {
        const auto it = std::find(basis.begin(), basis.end(), name);
        if (it == basis.end()) {
          throw ParseError(where + ": unknown basis vector '" + name + "'");
        }
        if (!poly.is_string()) throw ParseError(where + ": values must be strings");
        v.coords[it - basis.begin()] = poly_from_text(ctx, poly.get<std::string>());
      }
      if (!brackets.emplace(std::make_pair(i - 1, j - 1), std::move(v)).second) {
        throw ParseError(where + ": duplicate bracket for this pair");
      }
    }
  }
  return MetricLieAlgebra(ctx, basis, std::move(brackets));
}

MetricLieAlgebra algebra_from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

nlohmann::json algebra_to_json(const MetricLieAlgebra& g) {
  nlohmann::json doc;
  doc["dim"] = g.dim();
  doc["basis"] = g.basis_names();
  const auto& ctx = g.context();
  doc["params"] = {{"symbols", ctx->symbols()},
                   {"positive", ctx->positive_names()},
                   {"nonneg", ctx->nonneg_names()}};
  nlohmann::json brackets = nlohmann::json::array();
  for (const auto& [key, v] : g.stored_brackets()) {
    nlohmann::json value = nlohmann::json::object();
    for (int k = 0; k < g.dim(); ++k) {
      if (!v.coords[k].is_zero()) value[g.basis_names()[k]] = poly_to_text(v.coords[k]);
    }
    brackets.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"value", value}});
  }
  doc["brackets"] = brackets;
  return doc;
}

}  // namespace nilgeo
