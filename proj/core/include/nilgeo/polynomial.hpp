#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nilgeo/context.hpp"
#include "nilgeo/rational.hpp"

namespace nilgeo {

/// Product of symbol powers, stored as (symbol index, exponent) pairs sorted
/// by index with every exponent > 0. The empty monomial is 1.
struct Monomial {
  std::vector<std::pair<int, int>> factors;

  int total_degree() const;
  int exponent_of(int symbol) const;
  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return factors == other.factors; }
};

/// Graded lexicographic order: higher total degree first, ties broken by the
/// exponent of the earliest symbol.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with Rational coefficients over a fixed
/// ParamContext. Zero coefficients are never stored, so the representation
/// is canonical and operator== is structural equality.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  Polynomial() = default;
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial constant(ContextPtr ctx, Rational value);
  static Polynomial symbol(ContextPtr ctx, int index);
  static Polynomial symbol(ContextPtr ctx, std::string_view name);

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  /// Coefficient of an exact monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;
  /// If the polynomial is c * m for a single monomial m, returns true and
  /// fills the pair.
  bool single_term(Monomial& m, Rational& c) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  bool operator==(const Polynomial& other) const;

  void add_term(const Monomial& m, const Rational& c);

  /// Replaces each mapped symbol by a polynomial over the same context.
  Polynomial substitute(const std::map<int, Polynomial>& bindings) const;
  /// Evaluates at a full binding of every symbol that occurs; throws
  /// UsageError if any occurring symbol is unbound.
  Rational eval(const std::map<int, Rational>& bindings) const;
  /// Polynomials in `sym` with the remaining symbols pushed into the
  /// coefficients: result[k] is the coefficient of sym^k.
  std::vector<Polynomial> coefficients_in(int sym) const;
  /// Set of symbol indices occurring with nonzero exponent.
  std::vector<int> used_symbols() const;

  /// Same polynomial rebuilt over another context, matching symbols by name.
  Polynomial remapped(const ContextPtr& target) const;

private:
  void require_same_context(const Polynomial& other) const;

  ContextPtr ctx_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& p) {
  return p * scalar;
}

}  // namespace nilgeo
