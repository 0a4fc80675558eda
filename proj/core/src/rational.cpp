#include "oneq/rational.hpp"

#include <stdexcept>

namespace oneq {

namespace {

Integer parse_integer(std::string_view digits, bool allow_sign) {
  std::string_view body = digits;
  if (allow_sign && !body.empty() && body.front() == '-') body.remove_prefix(1);
  if (body.empty() || body.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("not an integer: '" + std::string(digits) + "'");
  }
  return Integer(std::string(digits));
}

}  // namespace

std::string to_fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  const Integer p = parse_integer(text.substr(0, slash), true);
  const Integer q = parse_integer(text.substr(slash + 1), false);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace oneq
