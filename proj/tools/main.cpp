#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "nilgeo/catalog.hpp"
#include "nilgeo/connection.hpp"
#include "nilgeo/curvature.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/finsler.hpp"
#include "nilgeo/geodesic.hpp"
#include "nilgeo/io.hpp"
#include "nilgeo/render.hpp"
#include "nilgeo/s_curvature.hpp"

namespace {

using namespace nilgeo;

struct Options {
  std::string preset;
  std::string input;
  std::string format = "text";
  std::string out;
  std::string x;
  int regime = 1;
  unsigned long long seed = 0;
  int samples = 0;
};

struct Source {
  MetricLieAlgebra algebra;
  std::optional<CatalogEntry> entry;
};

Source resolve_source(const Options& opt) {
  if (opt.preset.empty() == opt.input.empty()) {
    throw UsageError("exactly one of --preset and --input is required");
  }
  if (!opt.preset.empty()) {
    CatalogEntry entry = build(parse_preset(opt.preset), opt.regime);
    return {entry.algebra, std::move(entry)};
  }
  std::ifstream file(opt.input);
  if (!file) throw UsageError("cannot open input file '" + opt.input + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return {algebra_from_json_text(buffer.str()), std::nullopt};
}

std::vector<Rational> parse_coords(const std::string& text, int dim) {
  std::vector<Rational> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(rational_from_string(item));
  if (static_cast<int>(out.size()) != dim) {
    throw UsageError("--x expects " + std::to_string(dim) + " comma-separated rationals");
  }
  return out;
}

void emit(const Options& opt, const std::string& body) {
  if (opt.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw UsageError("cannot write output file '" + opt.out + "'");
  file << body;
}

// Default X for the S-curvature: symbolic weights on the generators of the
// Douglas space. Registers l1..ln when the context lacks them.
std::pair<MetricLieAlgebra, AlgebraVector> default_scurv_x(const MetricLieAlgebra& g) {
  const int n = g.dim();
  std::vector<std::string> missing;
  for (int k = 1; k <= n; ++k) {
    const std::string name = "l" + std::to_string(k);
    if (g.context()->find(name) < 0) missing.push_back(name);
  }
  MetricLieAlgebra algebra =
      missing.empty() ? g : g.with_context(g.context()->extend(missing));
  const Subspace douglas = douglas_space(algebra);
  AlgebraVector x = AlgebraVector::zero(algebra.context(), n);
  for (int i : douglas.basis_indices) {
    x.coords[i] = Polynomial::symbol(algebra.context(), "l" + std::to_string(i + 1));
  }
  return {std::move(algebra), std::move(x)};
}

std::map<int, Rational> scan_parameters(const Source& src, unsigned long long seed) {
  if (src.entry) return sample_parameters(*src.entry, seed);
  const auto& g = src.algebra;
  const auto& ctx = g.context();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, 8);
  std::uniform_int_distribution<int> den(1, 3);
  std::map<int, Rational> out;
  for (const auto& [key, v] : g.stored_brackets()) {
    for (const auto& c : v.coords) {
      for (int sym : c.used_symbols()) {
        if (out.count(sym)) continue;
        if (ctx->is_positive(sym)) {
          out[sym] = Rational(1 + num(rng), den(rng));
        } else if (ctx->is_nonneg(sym)) {
          out[sym] = Rational(num(rng), den(rng));
        } else {
          out[sym] = Rational(num(rng) - 4, den(rng));
        }
      }
    }
  }
  return out;
}

int run(const std::string& command, const Options& opt) {
  if (command == "presets") {
    std::string body;
    for (PresetId id : all_presets()) body += preset_name(id) + "\n";
    emit(opt, body);
    return 0;
  }
  const Format format = parse_format(opt.format);
  const Source src = resolve_source(opt);
  const MetricLieAlgebra& g = src.algebra;

  if (command == "connection") {
    emit(opt, render_connection(g, koszul_connection(g), format));
  } else if (command == "curvature") {
    emit(opt, render_curvature(g, curvature_tensor(g, koszul_connection(g)), format));
  } else if (command == "sectional" || command == "ricci" || command == "scalar") {
    const CurvatureSummary s =
        curvature_summary(g, curvature_tensor(g, koszul_connection(g)));
    if (command == "sectional") {
      emit(opt, render_sectional(g, s, format));
    } else if (command == "ricci") {
      emit(opt, render_ricci(g, s, format));
    } else {
      emit(opt, render_scalar(g, s, format));
    }
  } else if (command == "classify") {
    const ClassificationReport report = classify(g);
    std::string body = render_classification(g, report, format);
    if (!opt.x.empty() && format == Format::Text) {
      const auto x = parse_coords(opt.x, g.dim());
      bool in_douglas = true, in_berwald = true;
      for (int k = 0; k < g.dim(); ++k) {
        if (x[k] != 0 && !report.douglas.contains_axis(k)) in_douglas = false;
        if (x[k] != 0 && !report.berwald.contains_axis(k)) in_berwald = false;
      }
      body += std::string("x_in_douglas = ") + (in_douglas ? "true" : "false") + "\n";
      body += std::string("x_in_berwald = ") + (in_berwald ? "true" : "false") + "\n";
      body += std::string("x_randers_admissible = ") +
              (randers_norm_check(x) ? "true" : "false") + "\n";
    }
    emit(opt, body);
  } else if (command == "geodesic") {
    const GeodesicSystem sys = geodesic_system(g);
    std::string body = render_geodesic(sys, format);
    if (opt.samples > 0) {
      const std::vector<ComponentClaim> claims =
          src.entry ? src.entry->expected.components : std::vector<ComponentClaim>{};
      const ScanResult scan = numeric_component_scan(
          sys, claims, scan_parameters(src, opt.seed), opt.seed, opt.samples);
      body += render_scan(sys, scan, format);
    }
    emit(opt, body);
  } else if (command == "scurvature") {
    if (!opt.x.empty()) {
      const auto coords = parse_coords(opt.x, g.dim());
      AlgebraVector x = AlgebraVector::zero(g.context(), g.dim());
      for (int k = 0; k < g.dim(); ++k) {
        x.coords[k] = Polynomial::constant(g.context(), coords[k]);
      }
      emit(opt, render_scurvature(s_curvature(g, x), format));
    } else {
      const auto [algebra, x] = default_scurv_x(g);
      emit(opt, render_scurvature(s_curvature(algebra, x), format));
    }
  } else if (command == "verify") {
    if (!src.entry) throw UsageError("verify requires --preset");
    const auto checks = regression_bundle(*src.entry);
    emit(opt, render_checks(checks, format));
    for (const auto& check : checks) {
      if (!check.ok) return 1;
    }
  } else {
    throw UsageError("unknown subcommand '" + command + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact left-invariant geometry of nilpotent metric Lie algebras"};
  app.require_subcommand(1);

  Options opt;
  std::vector<CLI::App*> subs;
  for (const char* name : {"connection", "curvature", "sectional", "ricci", "scalar",
                           "classify", "geodesic", "scurvature", "verify", "presets"}) {
    CLI::App* sub = app.add_subcommand(name);
    if (std::string(name) != "presets") {
      sub->add_option("--preset", opt.preset, "catalog preset id");
      sub->add_option("--input", opt.input, "algebra document (JSON)");
      sub->add_option("--regime", opt.regime, "preset parameter regime");
      sub->add_option("--format", opt.format, "text|json|latex");
      sub->add_option("--x", opt.x, "X coordinates, comma-separated rationals");
      sub->add_option("--seed", opt.seed, "scan seed");
      sub->add_option("--samples", opt.samples, "scan samples per pattern");
    }
    sub->add_option("--out", opt.out, "write output to a file");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
