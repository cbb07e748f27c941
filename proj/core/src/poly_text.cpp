#include "nilgeo/poly_text.hpp"

#include <cctype>
#include <sstream>

#include "nilgeo/errors.hpp"

namespace nilgeo {
namespace {

std::string monomial_text(const ContextPtr& ctx, const Monomial& m) {
  std::string out;
  for (const auto& [sym, exp] : m.factors) {
    if (!out.empty()) out += "*";
    out += ctx->name(sym);
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out;
}

// Recursive-descent parser over: expr := term (('+'|'-') term)*,
// term := factor ('*' factor)*, factor := atom ('^' uint)?,
// atom := rational | symbol | '-' factor | '(' expr ')'.
class Parser {
public:
  Parser(ContextPtr ctx, std::string_view text) : ctx_(std::move(ctx)), text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) +
                     " in '" + std::string(text_) + "': " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial p = term();
    while (true) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      const int exp = parse_uint();
      Polynomial p = Polynomial::constant(ctx_, 1);
      for (int k = 0; k < exp; ++k) p = p * base;
      return p;
    }
    return base;
  }

  Polynomial atom() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ctx_, parse_rational());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = parse_ident();
      const int index = ctx_->find(name);
      if (index < 0) fail("unknown symbol '" + name + "'");
      return Polynomial::symbol(ctx_, index);
    }
    fail("expected a rational, symbol, or '('");
  }

  int parse_uint() {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an exponent");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Rational parse_rational() {
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Integer num{std::string(text_.substr(start, pos_ - start))};
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) fail("expected a denominator");
      Integer den{std::string(text_.substr(dstart, pos_ - dstart))};
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  std::string parse_ident() {
    const size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  ContextPtr ctx_;
  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

std::string poly_to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // terms() ascends in graded-lex; print in descending order.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational mag = neg ? Rational(-c) : c;
    const std::string mono = monomial_text(p.context(), m);
    if (mono.empty()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += rational_to_string(mag) + "*" + mono;
    }
  }
  return out;
}

Polynomial poly_from_text(ContextPtr ctx, std::string_view text) {
  return Parser(std::move(ctx), text).parse();
}

nlohmann::json poly_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [sym, exp] : m.factors) {
      mono[p.context()->name(sym)] = exp;
    }
    terms.push_back({{"coeff", rational_to_string(c)}, {"monomial", mono}});
  }
  return terms;
}

Polynomial poly_from_json(ContextPtr ctx, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  Polynomial p(ctx);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("monomial")) {
      throw ParseError("polynomial term must have 'coeff' and 'monomial'");
    }
    const Rational c = rational_from_string(term["coeff"].get<std::string>());
    Monomial m;
    for (const auto& [name, exp] : term["monomial"].items()) {
      if (!exp.is_number_integer() || exp.get<int>() <= 0) {
        throw ParseError("monomial exponents must be positive integers");
      }
      m.factors.emplace_back(ctx->index_of(name), exp.get<int>());
    }
    std::sort(m.factors.begin(), m.factors.end());
    p.add_term(m, c);
  }
  return p;
}

std::string poly_to_latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational mag = neg ? Rational(-c) : c;
    std::string mono;
    for (const auto& [sym, exp] : m.factors) {
      const std::string& name = p.context()->name(sym);
      // "y1" style names become subscripts; longer alphabetic names are
      // treated as macro names (lambda, mu).
      size_t alpha = 0;
      while (alpha < name.size() && std::isalpha(static_cast<unsigned char>(name[alpha]))) ++alpha;
      if (alpha == name.size()) {
        mono += name.size() > 1 ? "\\" + name + " " : name;
      } else {
        mono += name.substr(0, alpha) + "_{" + name.substr(alpha) + "}";
      }
      if (exp > 1) mono += "^{" + std::to_string(exp) + "}";
    }
    std::string coeff;
    if (denominator(mag) == 1) {
      coeff = numerator(mag).str();
    } else {
      coeff = "\\frac{" + numerator(mag).str() + "}{" + denominator(mag).str() + "}";
    }
    if (mono.empty()) {
      out += coeff;
    } else if (mag == 1) {
      out += mono;
    } else {
      out += coeff + mono;
    }
  }
  return out;
}

}  // namespace nilgeo
