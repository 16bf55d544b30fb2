#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lacunaria {

/// Exact rational number. GMP keeps it canonical (gcd 1, positive denominator)
/// after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in canonical form. Prefer this over the two-argument mpq_class
/// constructor, which leaves the fraction unreduced.
template <typename N, typename D>
Rational ratio(const N& num, const D& den) {
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

/// Parses "p", "p/q", "-0.6", "1.5e-3". Decimal inputs are converted exactly
/// (0.1 becomes 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "-1,2,1/3".
std::vector<Rational> parse_rational_list(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// x^e with the convention 0^0 = 1.
Rational power(const Rational& base, unsigned exponent);

/// Exact conversion of a finite double.
Rational from_double(double value);

/// Nearest double (ties to even). mpq_class::get_d truncates instead.
double to_double(const Rational& value);

}  // namespace lacunaria
