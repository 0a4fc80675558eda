#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace oneq {

/// Exact rational in lowest terms with positive denominator (GMP mpq).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// "p/q", always with an explicit denominator.
std::string to_fraction(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace oneq
