#include "lacunaria/rational.hpp"

#include <cctype>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace lacunaria {

namespace {

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_decimal(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  long exponent = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string::npos) {
    std::string exp_part = s.substr(epos + 1);
    s.erase(epos);
    std::size_t consumed = 0;
    try {
      exponent = std::stol(exp_part, &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid number: '" + text + "'");
    }
    if (consumed != exp_part.size()) throw std::invalid_argument("invalid number: '" + text + "'");
  }
  std::string int_part = s;
  std::string frac_part;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("invalid number: '" + text + "'");
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    throw std::invalid_argument("invalid number: '" + text + "'");
  }
  if (std::labs(exponent) > 4096) throw std::invalid_argument("exponent out of range: '" + text + "'");

  Integer digits(int_part + frac_part);
  long scale = exponent - static_cast<long>(frac_part.size());
  Integer ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  Rational result = scale >= 0 ? Rational(digits * ten_power) : ratio(digits, ten_power);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view input) {
  const std::string text = trim(input);
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    Rational num = parse_decimal(trim(text.substr(0, slash)));
    Rational den = parse_decimal(trim(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return num / den;
  }
  return parse_decimal(text);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    values.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return values;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational power(const Rational& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  // mpz_pow_ui(0, 0) is 1, so 0^0 = 1 falls out here.
  Rational result(num, den);
  result.canonicalize();
  return result;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  Rational result;
  mpq_set_d(result.get_mpq_t(), value);
  return result;
}

double to_double(const Rational& value) {
  const double t = value.get_d();  // truncated toward zero, within one ulp
  if (!std::isfinite(t)) return t;
  const double away = std::nextafter(t, value > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return t;
  const Rational d_t = abs(value - from_double(t));
  const Rational d_away = abs(value - from_double(away));
  if (d_away < d_t) return away;
  if (d_t < d_away) return t;
  // tie: pick the even mantissa
  return (std::bit_cast<std::uint64_t>(t) & 1) == 0 ? t : away;
}

}  // namespace lacunaria
