#include "nilgeo/s_curvature.hpp"

#include "nilgeo/errors.hpp"
#include "nilgeo/finsler.hpp"
#include "nilgeo/geodesic.hpp"

namespace nilgeo {
namespace {

// [lo, hi] with lo <= sqrt(r) <= hi, endpoints rational, for r >= 0.
void sqrt_enclosure(const Rational& r, const Integer& scale, Rational& lo, Rational& hi) {
  const Integer p = numerator(r), q = denominator(r);
  // sqrt(p/q) = sqrt(p*q)/q; floor integer sqrt at the requested scale.
  const Integer root = isqrt_floor(p * q * scale * scale);
  lo = Rational(root, q * scale);
  hi = Rational(root + 1, q * scale);
}

}  // namespace

SCurvExpression s_curvature(const MetricLieAlgebra& g, const AlgebraVector& x) {
  // Reuses the y-symbol registration rules of the geodesic system.
  GeodesicSystem sys = geodesic_system(g);
  const auto& ctx = sys.algebra.context();
  const int n = sys.algebra.dim();

  AlgebraVector xr = AlgebraVector::zero(ctx, n);
  if (x.dim() != n) throw UsageError("X must have algebra dimension");
  for (int k = 0; k < n; ++k) {
    if (!x.coords[k].is_zero()) xr.coords[k] = x.coords[k].remapped(ctx);
  }

  AlgebraVector y = AlgebraVector::zero(ctx, n);
  for (int k = 0; k < n; ++k) y.coords[k] = Polynomial::symbol(ctx, sys.y_symbols[k]);

  const Subspace douglas = douglas_space(sys.algebra);
  bool in_douglas = true;
  for (int k = 0; k < n; ++k) {
    if (!douglas.contains_axis(k) && !xr.coords[k].is_zero()) in_douglas = false;
  }

  SCurvExpression expr{sys.algebra, sys.y_symbols, xr, Polynomial(ctx),
                       Rational(n + 1, 2), Polynomial(ctx), in_douglas};
  const AlgebraVector xy = sys.algebra.bracket(xr, y);
  expr.correction = inner(xy, xr);
  if (in_douglas) {
    expr.numerator = inner(sys.algebra.bracket(y, xr), y);
  } else {
    expr.numerator = inner(xy, xr.scaled(inner(y, xr)) - y);
  }
  return expr;
}

SCurvValue s_curvature_eval(const SCurvExpression& expr,
                            const std::map<int, Rational>& bindings) {
  const int n = expr.algebra.dim();
  Rational yy(0), xy(0), xx(0);
  std::vector<Rational> yv(n), xv(n);
  for (int k = 0; k < n; ++k) {
    yv[k] = Polynomial::symbol(expr.algebra.context(), expr.y_symbols[k]).eval(bindings);
    xv[k] = expr.x.coords[k].eval(bindings);
    yy += yv[k] * yv[k];
    xy += xv[k] * yv[k];
    xx += xv[k] * xv[k];
  }
  if (yy == 0) throw DomainError("S-curvature is undefined at Y = 0");
  if (xx >= 1) throw DomainError("Randers data requires ||X|| < 1");

  const Rational num = expr.numerator.eval(bindings);
  const Rational corr = expr.correction.eval(bindings);

  SCurvValue out;
  Integer root;
  if (perfect_square(numerator(yy), root)) {
    Integer droot;
    if (perfect_square(denominator(yy), droot)) {
      const Rational alpha(root, droot);
      out.exact = true;
      out.value = expr.scale * (num / (alpha + xy) - corr);
      return out;
    }
  }

  const Rational target(Integer(1), Integer("1000000000000"));
  Integer scale("100000000");
  while (true) {
    Rational alo, ahi;
    sqrt_enclosure(yy, scale, alo, ahi);
    // F = alpha + <X,Y> is positive on the admissible domain.
    const Rational flo = alo + xy, fhi = ahi + xy;
    const Rational q1 = num / flo, q2 = num / fhi;
    out.lo = expr.scale * ((q1 < q2 ? q1 : q2) - corr);
    out.hi = expr.scale * ((q1 < q2 ? q2 : q1) - corr);
    if (out.hi - out.lo <= target) break;
    scale *= 1000000;
  }
  out.exact = false;
  return out;
}

}  // namespace nilgeo
