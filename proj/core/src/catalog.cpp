#include "nilgeo/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

#include <nilgeo/catalog_data.hpp>

#include "nilgeo/connection.hpp"
#include "nilgeo/curvature.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/finsler.hpp"
#include "nilgeo/poly_text.hpp"
#include "nilgeo/s_curvature.hpp"

namespace nilgeo {
namespace {

struct BracketTerm {
  int coord;
  const char* sym;
};
struct BracketDef {
  int i, j;
  std::vector<BracketTerm> terms;
};
struct PresetDef {
  const char* name;
  std::vector<const char*> params;
  std::vector<const char*> positive;
  std::vector<const char*> nonneg;
  std::vector<BracketDef> brackets;
  std::string_view data;
};

PresetDef preset_def(PresetId id) {
  switch (id) {
    case PresetId::L57:
      return {"l57",
              {"a", "b", "c", "d", "f", "g"},
              {"a", "d", "g"},
              {"b", "f"},
              {{0, 1, {{2, "a"}, {3, "b"}, {4, "c"}}},
               {0, 2, {{3, "d"}, {4, "f"}}},
               {0, 3, {{4, "g"}}}},
              detail::kExpectedL57};
    case PresetId::L56:
      return {"l56",
              {"a", "b", "c", "d", "f", "g", "h"},
              {"a", "d", "g", "h"},
              {"b", "f"},
              {{0, 1, {{2, "a"}, {3, "b"}, {4, "c"}}},
               {0, 2, {{3, "d"}, {4, "f"}}},
               {0, 3, {{4, "g"}}},
               {1, 2, {{4, "h"}}}},
              detail::kExpectedL56};
    case PresetId::L55:
      return {"l55",
              {"a", "b", "c", "d", "e"},
              {"a", "d", "e"},
              {"b", "c"},
              {{0, 1, {{3, "a"}, {4, "b"}}},
               {0, 2, {{4, "c"}}},
               {0, 3, {{4, "d"}}},
               {1, 2, {{4, "e"}}}},
              detail::kExpectedL55};
    case PresetId::L59:
      return {"l59",
              {"k", "l", "m", "p", "q"},
              {"k", "p", "q"},
              {"l", "m"},
              {{0, 1, {{2, "k"}, {3, "l"}, {4, "m"}}},
               {0, 2, {{3, "p"}}},
               {1, 2, {{4, "q"}}}},
              detail::kExpectedL59};
    case PresetId::TwostepI:
      return {"twostep_i",
              {"lambda", "mu"},
              {"lambda", "mu"},
              {},
              {{0, 1, {{4, "lambda"}}}, {2, 3, {{4, "mu"}}}},
              detail::kExpectedTwostepI};
    case PresetId::TwostepII:
      return {"twostep_ii",
              {"lambda", "mu"},
              {"lambda", "mu"},
              {},
              {{0, 1, {{3, "lambda"}}}, {0, 2, {{4, "mu"}}}},
              detail::kExpectedTwostepII};
    case PresetId::TwostepIII:
      return {"twostep_iii",
              {"lambda"},
              {"lambda"},
              {},
              {{0, 1, {{2, "lambda"}}}},
              detail::kExpectedTwostepIII};
  }
  throw UsageError("unknown preset id");
}

constexpr int kDim = 5;

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

int basis_index(const std::string& name, const std::vector<std::string>& basis) {
  for (size_t k = 0; k < basis.size(); ++k) {
    if (basis[k] == name) return static_cast<int>(k);
  }
  throw ParseError("unknown basis vector '" + name + "' in expected data");
}

// "0" or "E3: poly | E4: poly".
AlgebraVector parse_vector(const ContextPtr& ctx, const std::vector<std::string>& basis,
                           const std::string& rhs) {
  AlgebraVector v = AlgebraVector::zero(ctx, kDim);
  if (rhs == "0") return v;
  for (const auto& item : split(rhs, '|')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'Ek: poly' in '" + item + "'");
    const int k = basis_index(trim(item.substr(0, colon)), basis);
    v.coords[k] = poly_from_text(ctx, item.substr(colon + 1));
  }
  return v;
}

ExpectedBundle parse_expected(const ContextPtr& ctx, const std::vector<std::string>& basis,
                              std::string_view text) {
  ExpectedBundle out;
  out.ricci.assign(kDim, Polynomial(ctx));
  bool have_ricci = false;
  out.geodesic.assign(kDim, Polynomial(ctx));
  bool have_geodesic = false;

  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string rhs = trim(line.substr(eq + 1));

    if (section == "nilpotency") {
      out.nilpotency = std::stoi(rhs);
    } else if (section == "connection") {
      const auto pair = split(key, ' ');
      out.connection[{basis_index(pair.at(0), basis), basis_index(pair.at(1), basis)}] =
          parse_vector(ctx, basis, rhs);
    } else if (section == "curvature") {
      const auto parts = split(key, '|');
      const auto pair = split(parts.at(0), ' ');
      out.curvature[{{basis_index(pair.at(0), basis), basis_index(pair.at(1), basis)},
                     basis_index(parts.at(1), basis)}] = parse_vector(ctx, basis, rhs);
    } else if (section == "sectional") {
      const auto pair = split(key, ' ');
      out.sectional[{basis_index(pair.at(0), basis), basis_index(pair.at(1), basis)}] =
          poly_from_text(ctx, rhs);
    } else if (section == "ricci") {
      out.ricci[basis_index(key, basis)] = poly_from_text(ctx, rhs);
      have_ricci = true;
    } else if (section == "scalar") {
      out.scalar = poly_from_text(ctx, rhs);
    } else if (section == "douglas" || section == "berwald") {
      std::vector<int> span;
      if (rhs != "-") {
        for (const auto& name : split(rhs, ' ')) span.push_back(basis_index(name, basis));
      }
      std::sort(span.begin(), span.end());
      (section == "douglas" ? out.douglas_span : out.berwald_span) = span;
    } else if (section == "nonranders_douglas") {
      out.nonranders_exists = (rhs == "true");
    } else if (section == "geodesic") {
      out.geodesic[basis_index(key, basis)] = poly_from_text(ctx, rhs);
      have_geodesic = true;
    } else if (section == "geodesic_variant") {
      out.geodesic_variant[basis_index(key, basis)] = poly_from_text(ctx, rhs);
    } else if (section == "components") {
      const auto parts = split(rhs, '|');
      ComponentClaim claim;
      claim.name = parts.at(0);
      for (size_t k = 1; k < parts.size(); ++k) {
        const auto colon = parts[k].find(':');
        const std::string tag = trim(parts[k].substr(0, colon));
        const std::string body = trim(parts[k].substr(colon + 1));
        if (tag == "zeros") {
          if (body != "-") {
            for (const auto& name : split(body, ' ')) {
              claim.constrained_zero.insert(basis_index(name, basis));
            }
          }
        } else if (tag == "relations") {
          if (body != "-") {
            for (const auto& rel : split(body, ';')) {
              claim.extra_relations.push_back(poly_from_text(ctx, rel));
            }
          }
        }
      }
      out.components.push_back(std::move(claim));
    } else if (section == "scurvature") {
      if (key == "x") {
        out.scurv_x = parse_vector(ctx, basis, rhs);
      } else if (key == "numerator") {
        out.scurv_numerator = poly_from_text(ctx, rhs);
      }
    } else {
      throw ParseError("unknown section '" + section + "' in expected data");
    }
  }
  if (!have_ricci) out.ricci.clear();
  if (!have_geodesic) out.geodesic.clear();
  return out;
}

std::vector<std::string> make_basis() {
  std::vector<std::string> basis;
  for (int k = 1; k <= kDim; ++k) basis.push_back("E" + std::to_string(k));
  return basis;
}

ContextPtr make_context(const PresetDef& def) {
  std::vector<std::string> symbols(def.params.begin(), def.params.end());
  for (int k = 1; k <= kDim; ++k) symbols.push_back("y" + std::to_string(k));
  for (int k = 1; k <= kDim; ++k) symbols.push_back("l" + std::to_string(k));
  return ParamContext::make(symbols, {def.positive.begin(), def.positive.end()},
                            {def.nonneg.begin(), def.nonneg.end()});
}

MetricLieAlgebra make_algebra(const PresetDef& def, const ContextPtr& ctx) {
  std::map<std::pair<int, int>, AlgebraVector> brackets;
  for (const auto& b : def.brackets) {
    AlgebraVector v = AlgebraVector::zero(ctx, kDim);
    for (const auto& term : b.terms) v.coords[term.coord] = Polynomial::symbol(ctx, term.sym);
    brackets[{b.i, b.j}] = std::move(v);
  }
  return MetricLieAlgebra(ctx, make_basis(), std::move(brackets));
}

template <typename Fn>
ExpectedBundle transform_bundle(const ExpectedBundle& in, Fn&& fn) {
  ExpectedBundle out = in;
  auto map_vec = [&](AlgebraVector& v) {
    for (auto& c : v.coords) c = fn(c);
  };
  for (auto& [key, v] : out.connection) map_vec(v);
  for (auto& [key, v] : out.curvature) map_vec(v);
  for (auto& [key, p] : out.sectional) p = fn(p);
  for (auto& p : out.ricci) p = fn(p);
  if (out.scalar) out.scalar = fn(*out.scalar);
  for (auto& p : out.geodesic) p = fn(p);
  for (auto& [key, p] : out.geodesic_variant) p = fn(p);
  for (auto& claim : out.components) {
    for (auto& rel : claim.extra_relations) rel = fn(rel);
  }
  if (out.scurv_x) map_vec(*out.scurv_x);
  if (out.scurv_numerator) out.scurv_numerator = fn(*out.scurv_numerator);
  return out;
}

}  // namespace

std::vector<PresetId> all_presets() {
  return {PresetId::L57,      PresetId::L56,       PresetId::L55,      PresetId::L59,
          PresetId::TwostepI, PresetId::TwostepII, PresetId::TwostepIII};
}

std::string preset_name(PresetId id) { return preset_def(id).name; }

PresetId parse_preset(std::string_view name) {
  for (PresetId id : all_presets()) {
    if (preset_name(id) == name) return id;
  }
  throw UsageError("unknown preset '" + std::string(name) + "'");
}

CatalogEntry build(PresetId id, int regime) {
  if (regime != 1 && !(id == PresetId::L59 && regime == 2)) {
    throw UsageError("preset has no regime " + std::to_string(regime));
  }
  PresetDef def = preset_def(id);
  if (id == PresetId::L59 && regime == 2) {
    // Degenerate branch: m = 0 and the two lower structure constants equal.
    const ContextPtr full_ctx = make_context(def);
    const ExpectedBundle full =
        parse_expected(full_ctx, make_basis(), def.data);
    const int m = full_ctx->index_of("m");
    const int q = full_ctx->index_of("q");
    const std::map<int, Polynomial> subs = {
        {m, Polynomial(full_ctx)}, {q, Polynomial::symbol(full_ctx, "p")}};

    PresetDef def2 = def;
    def2.params = {"k", "l", "p"};
    def2.positive = {"k", "p"};
    def2.nonneg = {"l"};
    def2.brackets = {{0, 1, {{2, "k"}, {3, "l"}}},
                     {0, 2, {{3, "p"}}},
                     {1, 2, {{4, "p"}}}};
    const ContextPtr ctx2 = make_context(def2);
    ExpectedBundle expected = transform_bundle(full, [&](const Polynomial& p) {
      return p.substitute(subs).remapped(ctx2);
    });
    return CatalogEntry{id, 2, preset_name(id) + "_r2", make_algebra(def2, ctx2),
                        std::move(expected)};
  }
  const ContextPtr ctx = make_context(def);
  ExpectedBundle expected = parse_expected(ctx, make_basis(), def.data);
  return CatalogEntry{id, 1, def.name, make_algebra(def, ctx), std::move(expected)};
}

std::vector<CheckResult> regression_bundle(const CatalogEntry& entry) {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  const MetricLieAlgebra& g = entry.algebra;
  const ExpectedBundle& exp = entry.expected;
  const auto& basis = g.basis_names();

  add("jacobi", g.jacobi_failures().empty());
  if (exp.nilpotency >= 0) {
    const int cls = nilpotency_class(g);
    add("nilpotency", cls == exp.nilpotency, "computed class " + std::to_string(cls));
  }

  const ConnectionTable conn = koszul_connection(g);
  if (!exp.connection.empty()) {
    bool ok = true;
    std::string detail;
    for (const auto& [key, want] : exp.connection) {
      if (!(conn.at(key.first, key.second) == want)) {
        ok = false;
        detail = "mismatch at (" + basis[key.first] + "," + basis[key.second] + ")";
        break;
      }
    }
    add("connection", ok, detail);
  }

  const CurvatureTensor R = curvature_tensor(g, conn);
  if (!exp.curvature.empty()) {
    bool ok = true;
    std::string detail;
    for (const auto& [key, want] : exp.curvature) {
      const auto [pair, k] = key;
      if (!(R.at(pair.first, pair.second, k) == want)) {
        ok = false;
        detail = "mismatch at R(" + basis[pair.first] + "," + basis[pair.second] + ")" +
                 basis[k];
        break;
      }
    }
    add("curvature", ok, detail);
  }

  const CurvatureSummary summary = curvature_summary(g, R);
  if (!exp.sectional.empty()) {
    bool ok = true;
    for (const auto& [key, want] : exp.sectional) {
      ok = ok && summary.sectional_at(key.first, key.second) == want;
    }
    add("sectional", ok);
  }
  if (!exp.ricci.empty()) {
    bool ok = true;
    for (int i = 0; i < g.dim(); ++i) ok = ok && summary.ricci_diag[i] == exp.ricci[i];
    add("ricci", ok);
    // Cross-consistency of the stored tables themselves.
    if (!exp.sectional.empty()) {
      bool rows = true;
      for (int i = 0; i < g.dim(); ++i) {
        Polynomial sum(g.context());
        for (int j = 0; j < g.dim(); ++j) {
          if (i == j) continue;
          const auto it = exp.sectional.find(i < j ? std::make_pair(i, j)
                                                   : std::make_pair(j, i));
          if (it != exp.sectional.end()) sum += it->second;
        }
        rows = rows && sum == exp.ricci[i];
      }
      add("ricci_rowsum", rows);
    }
  }
  if (exp.scalar) {
    add("scalar", summary.scalar == *exp.scalar);
    if (!exp.ricci.empty()) {
      Polynomial sum(g.context());
      for (const auto& r : exp.ricci) sum += r;
      add("scalar_trace", sum == *exp.scalar);
    }
  }

  if (exp.douglas_span) {
    const Subspace d = douglas_space(g);
    add("douglas", d.basis_indices == *exp.douglas_span, d.description(basis));
  }
  if (exp.berwald_span) {
    const Subspace b = berwald_space(g, conn);
    add("berwald", b.basis_indices == *exp.berwald_span, b.description(basis));
    if (exp.nonranders_exists) {
      add("nonranders_douglas", !b.is_zero() == *exp.nonranders_exists);
    }
  }

  const GeodesicSystem sys = geodesic_system(g);
  if (!exp.geodesic.empty()) {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < g.dim(); ++i) {
      // Rows are pinned up to a global sign per equation.
      if (!(sys.equations[i] == exp.geodesic[i] || sys.equations[i] == -exp.geodesic[i])) {
        ok = false;
        detail = "row " + basis[i] + " computed " + poly_to_text(sys.equations[i]);
        break;
      }
    }
    add("geodesic_system", ok, detail);
  }
  for (const auto& [row, variant] : exp.geodesic_variant) {
    // The stored variant row is expected to disagree with the derived one.
    const bool differs =
        !(sys.equations[row] == variant || sys.equations[row] == -variant);
    add("geodesic_variant_row_" + basis[row] + "_differs", differs);
  }
  for (const auto& claim : exp.components) {
    add("component_" + claim.name, verify_component(sys, claim));
  }

  if (exp.scurv_x && exp.scurv_numerator) {
    const SCurvExpression s = s_curvature(g, *exp.scurv_x);
    add("scurv_reduced", s.reduced);
    add("scurv_numerator", s.numerator == *exp.scurv_numerator,
        poly_to_text(s.numerator));
    add("scurv_correction_zero", s.correction.is_zero());
    std::map<int, Polynomial> doubled;
    for (int k = 0; k < g.dim(); ++k) {
      doubled[s.y_symbols[k]] =
          Polynomial::symbol(g.context(), s.y_symbols[k]) * Rational(2);
    }
    add("scurv_quadratic_scaling",
        s.numerator.substitute(doubled) == s.numerator * Rational(4));
  }
  return out;
}

std::map<int, Rational> sample_parameters(const CatalogEntry& entry,
                                          unsigned long long seed) {
  const auto& ctx = entry.algebra.context();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, 8);
  std::uniform_int_distribution<int> den(1, 3);
  std::map<int, Rational> out;
  std::set<int> used;
  for (const auto& [key, v] : entry.algebra.stored_brackets()) {
    for (const auto& c : v.coords) {
      for (int sym : c.used_symbols()) used.insert(sym);
    }
  }
  for (int sym : used) {
    if (ctx->is_positive(sym)) {
      out[sym] = Rational(1 + num(rng), den(rng));
    } else if (ctx->is_nonneg(sym)) {
      out[sym] = Rational(num(rng), den(rng));
    } else {
      out[sym] = Rational(num(rng) - 4, den(rng));
    }
  }
  if (entry.id == PresetId::L59 && entry.regime == 1) {
    // This family assumes the highest weight strictly dominates: q > p.
    const int p = ctx->index_of("p"), q = ctx->index_of("q");
    out[q] = out[p] + Rational(1 + num(rng), den(rng));
  }
  return out;
}

}  // namespace nilgeo
