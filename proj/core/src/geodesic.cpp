#include "nilgeo/geodesic.hpp"

#include <algorithm>
#include <random>

#include "nilgeo/errors.hpp"
#include "nilgeo/poly_text.hpp"

namespace nilgeo {
namespace {

std::map<int, Polynomial> zero_bindings(const GeodesicSystem& system,
                                        const std::set<int>& coords) {
  std::map<int, Polynomial> bindings;
  const auto& ctx = system.algebra.context();
  for (int c : coords) {
    bindings.emplace(system.y_symbols.at(c), Polynomial(ctx));
  }
  return bindings;
}

// eq == q * rel for some rational q; the candidate q comes from the leading
// terms, then the identity is checked exactly.
bool rational_multiple_of(const Polynomial& eq, const Polynomial& rel) {
  if (rel.is_zero()) return false;
  const auto& lead_rel = *rel.terms().rbegin();
  const Rational lead_eq = eq.coefficient(lead_rel.first);
  if (lead_eq == 0) return false;
  const Rational q = lead_eq / lead_rel.second;
  return eq == rel * q;
}

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value < 0) return false;
  Integer rn, rd;
  if (!perfect_square(numerator(value), rn)) return false;
  if (!perfect_square(denominator(value), rd)) return false;
  root = Rational(rn, rd);
  return true;
}

// Rational roots of c2*t^2 + c1*t + c0 = 0 (nonconstant in t).
std::vector<Rational> quadratic_roots(const Rational& c2, const Rational& c1,
                                      const Rational& c0) {
  std::vector<Rational> roots;
  if (c2 == 0) {
    if (c1 != 0) roots.push_back(-c0 / c1);
    return roots;
  }
  Rational sq;
  if (!rational_sqrt(c1 * c1 - 4 * c2 * c0, sq)) return roots;
  roots.push_back((-c1 + sq) / (2 * c2));
  if (sq != 0) roots.push_back((-c1 - sq) / (2 * c2));
  return roots;
}

}  // namespace

GeodesicSystem geodesic_system(const MetricLieAlgebra& g) {
  const int n = g.dim();
  std::vector<std::string> y_names;
  for (int k = 1; k <= n; ++k) y_names.push_back("y" + std::to_string(k));

  ContextPtr ctx = g.context();
  int found = 0;
  for (const auto& name : y_names) found += (ctx->find(name) >= 0) ? 1 : 0;
  MetricLieAlgebra algebra = g;
  if (found == 0) {
    ctx = ctx->extend(y_names);
    algebra = g.with_context(ctx);
  } else if (found != n) {
    throw UsageError("context registers only part of y1..yn");
  }

  GeodesicSystem system{std::move(algebra), {}, {}};
  for (const auto& name : y_names) system.y_symbols.push_back(ctx->index_of(name));

  for (const auto& [key, value] : system.algebra.stored_brackets()) {
    for (const auto& coord : value.coords) {
      for (int sym : coord.used_symbols()) {
        if (std::find(system.y_symbols.begin(), system.y_symbols.end(), sym) !=
            system.y_symbols.end()) {
          throw UsageError("structure constants must not involve y coordinates");
        }
      }
    }
  }

  AlgebraVector y = AlgebraVector::zero(ctx, n);
  for (int k = 0; k < n; ++k) y.coords[k] = Polynomial::symbol(ctx, system.y_symbols[k]);
  for (int i = 0; i < n; ++i) {
    const AlgebraVector ei = AlgebraVector::basis(ctx, n, i);
    system.equations.push_back(inner(system.algebra.bracket(y, ei), y));
  }
  return system;
}

bool verify_component(const GeodesicSystem& system, const ComponentClaim& claim) {
  const auto bindings = zero_bindings(system, claim.constrained_zero);
  std::vector<Polynomial> relations;
  for (const auto& rel : claim.extra_relations) {
    Polynomial reduced = rel.substitute(bindings);
    if (!reduced.is_zero()) relations.push_back(std::move(reduced));
  }
  for (const auto& eq : system.equations) {
    const Polynomial reduced = eq.substitute(bindings);
    if (reduced.is_zero()) continue;
    const bool matched = std::any_of(relations.begin(), relations.end(),
                                     [&](const Polynomial& rel) {
                                       return rational_multiple_of(reduced, rel);
                                     });
    if (!matched) return false;
  }
  return true;
}

ScanResult numeric_component_scan(const GeodesicSystem& system,
                                  const std::vector<ComponentClaim>& claims,
                                  const std::map<int, Rational>& params,
                                  unsigned long long seed, int samples) {
  const int n = system.algebra.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num_dist(-9, 9);
  std::uniform_int_distribution<int> den_dist(1, 4);
  auto random_rational = [&] { return Rational(num_dist(rng), den_dist(rng)); };

  auto eval_eqs = [&](const std::vector<Rational>& y) {
    std::map<int, Rational> bindings = params;
    for (int k = 0; k < n; ++k) bindings[system.y_symbols[k]] = y[k];
    for (const auto& eq : system.equations) {
      if (eq.eval(bindings) != 0) return false;
    }
    return true;
  };

  std::vector<std::vector<Rational>> found;
  auto record = [&](std::vector<Rational> y) {
    int lead = -1;
    for (int k = 0; k < n && lead < 0; ++k) {
      if (y[k] != 0) lead = k;
    }
    if (lead < 0) return;  // the zero vector is not a geodesic direction
    const Rational scale = y[lead];
    for (auto& c : y) c /= scale;
    if (std::find(found.begin(), found.end(), y) == found.end()) {
      found.push_back(std::move(y));
    }
  };

  // Random points supported on every coordinate subspace: subspaces fully
  // contained in the solution set show up at every sample.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    for (int s = 0; s < samples; ++s) {
      std::vector<Rational> y(n, Rational(0));
      for (int k = 0; k < n; ++k) {
        if (mask & (1u << k)) y[k] = random_rational();
      }
      if (eval_eqs(y)) record(std::move(y));
    }
  }

  // One-variable elimination: normalize y_a = 1, sample every coordinate
  // except y_b, then the system is univariate of degree <= 2 in y_b.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int s = 0; s < samples; ++s) {
        std::map<int, Rational> bindings = params;
        std::vector<Rational> base(n);
        for (int k = 0; k < n; ++k) {
          if (k == b) continue;
          base[k] = (k == a) ? Rational(1) : random_rational();
          bindings[system.y_symbols[k]] = base[k];
        }
        std::vector<Rational> common;
        bool first = true, infeasible = false, unconstrained = true;
        for (const auto& eq : system.equations) {
          const auto coeffs = eq.coefficients_in(system.y_symbols[b]);
          Rational c[3] = {Rational(0), Rational(0), Rational(0)};
          for (size_t d = 0; d < coeffs.size() && d < 3; ++d) {
            c[d] = coeffs[d].eval(bindings);
          }
          if (c[1] == 0 && c[2] == 0) {
            if (c[0] != 0) infeasible = true;
            continue;
          }
          unconstrained = false;
          auto roots = quadratic_roots(c[2], c[1], c[0]);
          std::sort(roots.begin(), roots.end());
          if (first) {
            common = std::move(roots);
            first = false;
          } else {
            std::vector<Rational> merged;
            std::set_intersection(common.begin(), common.end(), roots.begin(),
                                  roots.end(), std::back_inserter(merged));
            common = std::move(merged);
          }
          if (common.empty()) break;
        }
        if (infeasible) continue;
        if (unconstrained) common = {Rational(0)};
        for (const auto& root : common) {
          std::vector<Rational> y = base;
          y[b] = root;
          if (eval_eqs(y)) record(std::move(y));
        }
      }
    }
  }

  std::sort(found.begin(), found.end());

  ScanResult result;
  for (auto& point : found) {
    ScanSolution sol;
    sol.point = std::move(point);
    for (const auto& claim : claims) {
      bool ok = true;
      for (int c : claim.constrained_zero) ok = ok && sol.point[c] == 0;
      if (ok) {
        std::map<int, Rational> bindings = params;
        for (int k = 0; k < n; ++k) bindings[system.y_symbols[k]] = sol.point[k];
        for (const auto& rel : claim.extra_relations) {
          ok = ok && rel.eval(bindings) == 0;
        }
      }
      if (ok) sol.matched_claims.push_back(claim.name);
    }
    if (sol.matched_claims.empty()) ++result.unmatched;
    result.solutions.push_back(std::move(sol));
  }
  return result;
}

}  // namespace nilgeo
