#include "nilgeo/polynomial.hpp"

#include <algorithm>

#include "nilgeo/errors.hpp"

namespace nilgeo {

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [sym, exp] : factors) d += exp;
  return d;
}

int Monomial::exponent_of(int symbol) const {
  for (const auto& [sym, exp] : factors) {
    if (sym == symbol) return exp;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = factors.begin(), b = other.factors.begin();
  while (a != factors.end() || b != other.factors.end()) {
    if (b == other.factors.end() || (a != factors.end() && a->first < b->first)) {
      out.factors.push_back(*a++);
    } else if (a == factors.end() || b->first < a->first) {
      out.factors.push_back(*b++);
    } else {
      out.factors.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // Equal degree: lex with earlier symbols dominant. Walk the sparse factor
  // lists; a missing symbol counts as exponent 0.
  auto ia = a.factors.begin(), ib = b.factors.begin();
  while (ia != a.factors.end() && ib != b.factors.end()) {
    if (ia->first != ib->first) {
      // The list with the earlier symbol has a positive exponent where the
      // other has zero, so it is lex-greater.
      return ia->first > ib->first;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return ia == a.factors.end() && ib != b.factors.end();
}

Polynomial Polynomial::constant(ContextPtr ctx, Rational value) {
  Polynomial p(std::move(ctx));
  if (value != 0) p.terms_.emplace(Monomial{}, std::move(value));
  return p;
}

Polynomial Polynomial::symbol(ContextPtr ctx, int index) {
  if (index < 0 || index >= ctx->size()) {
    throw UsageError("symbol index out of range");
  }
  Polynomial p(std::move(ctx));
  p.terms_.emplace(Monomial{{{index, 1}}}, Rational(1));
  return p;
}

Polynomial Polynomial::symbol(ContextPtr ctx, std::string_view name) {
  const int index = ctx->index_of(name);
  return symbol(std::move(ctx), index);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.factors.empty());
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.total_degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::single_term(Monomial& m, Rational& c) const {
  if (terms_.size() != 1) return false;
  m = terms_.begin()->first;
  c = terms_.begin()->second;
  return true;
}

void Polynomial::require_same_context(const Polynomial& other) const {
  if (ctx_ != other.ctx_) {
    throw UsageError("polynomials belong to different parameter contexts");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ctx_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_context(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_context(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_context(other);
  Polynomial out(ctx_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial out = *this;
  out *= scalar;
  return out;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (ctx_ && other.ctx_) require_same_context(other);
  return terms_ == other.terms_;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& bindings) const {
  for (const auto& [sym, value] : bindings) {
    if (value.ctx_ != ctx_) {
      throw UsageError("substitution value built over a different context");
    }
    (void)sym;
  }
  Polynomial out(ctx_);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(ctx_, c);
    for (const auto& [sym, exp] : m.factors) {
      auto it = bindings.find(sym);
      const Polynomial base = (it != bindings.end()) ? it->second : symbol(ctx_, sym);
      for (int k = 0; k < exp; ++k) term = term * base;
    }
    out += term;
  }
  return out;
}

Rational Polynomial::eval(const std::map<int, Rational>& bindings) const {
  Rational out(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [sym, exp] : m.factors) {
      auto it = bindings.find(sym);
      if (it == bindings.end()) {
        throw UsageError("unbound symbol in evaluation: '" + ctx_->name(sym) + "'");
      }
      for (int k = 0; k < exp; ++k) term *= it->second;
    }
    out += term;
  }
  return out;
}

std::vector<Polynomial> Polynomial::coefficients_in(int sym) const {
  int max_exp = 0;
  for (const auto& [m, c] : terms_) max_exp = std::max(max_exp, m.exponent_of(sym));
  std::vector<Polynomial> out(max_exp + 1, Polynomial(ctx_));
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    int exp = 0;
    for (const auto& [s, e] : m.factors) {
      if (s == sym) {
        exp = e;
      } else {
        rest.factors.emplace_back(s, e);
      }
    }
    out[exp].add_term(rest, c);
  }
  return out;
}

std::vector<int> Polynomial::used_symbols() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [sym, exp] : m.factors) {
      if (!std::binary_search(out.begin(), out.end(), sym)) {
        out.insert(std::lower_bound(out.begin(), out.end(), sym), sym);
      }
    }
  }
  return out;
}

Polynomial Polynomial::remapped(const ContextPtr& target) const {
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Monomial mapped;
    for (const auto& [sym, exp] : m.factors) {
      mapped.factors.emplace_back(target->index_of(ctx_->name(sym)), exp);
    }
    std::sort(mapped.factors.begin(), mapped.factors.end());
    out.add_term(mapped, c);
  }
  return out;
}

}  // namespace nilgeo
