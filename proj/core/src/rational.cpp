#include "nilgeo/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include "nilgeo/errors.hpp"

namespace nilgeo {

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(std::string_view text) {
  auto bad = [&] { throw ParseError("invalid rational: '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    Integer num{std::string(text.substr(0, slash))};
    Integer den{std::string(text.substr(slash + 1))};
    if (den == 0) bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return {};  // unreachable
}

Integer isqrt_floor(const Integer& n) {
  return boost::multiprecision::sqrt(n);
}

bool perfect_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = isqrt_floor(n);
  return root * root == n;
}

}  // namespace nilgeo
