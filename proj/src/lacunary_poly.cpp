#include "lacunaria/lacunary_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace lacunaria {

LacunaryPolynomial::LacunaryPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
  canonicalize();
  for (const auto& t : terms_) declared_.push_back(t.exponent);
}

LacunaryPolynomial::LacunaryPolynomial(const GammaSet& exponent_set, std::span<const Rational> coefficients)
    : declared_(exponent_set.begin(), exponent_set.end()) {
  if (coefficients.size() != exponent_set.size()) {
    throw std::invalid_argument("coefficient count does not match exponent set size");
  }
  for (std::size_t j = 0; j < coefficients.size(); ++j) terms_.push_back({exponent_set[j], coefficients[j]});
  canonicalize();
}

void LacunaryPolynomial::canonicalize() {
  std::map<unsigned, Rational> merged;
  for (const auto& t : terms_) merged[t.exponent] += t.coefficient;
  terms_.clear();
  for (auto& [e, c] : merged) {
    if (c != 0) terms_.push_back({e, c});
  }
}

namespace {

unsigned parse_exponent(const std::string& text, const std::string& whole) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("invalid exponent in polynomial '" + whole + "'");
  }
  unsigned long e = std::stoul(text);
  if (e > 4096) throw std::invalid_argument("exponent too large in polynomial '" + whole + "'");
  return static_cast<unsigned>(e);
}

Term parse_term(std::string term, const std::string& whole) {
  bool negative = false;
  if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
    negative = term[0] == '-';
    term.erase(0, 1);
  }
  if (term.empty()) throw std::invalid_argument("empty term in polynomial '" + whole + "'");

  Rational coefficient = 1;
  unsigned exponent = 0;
  auto xpos = term.find('x');
  if (xpos == std::string::npos) {
    coefficient = parse_rational(term);
  } else {
    std::string coef_part = term.substr(0, xpos);
    std::string rest = term.substr(xpos + 1);
    if (!coef_part.empty()) {
      if (coef_part.back() != '*') throw std::invalid_argument("expected '*' before x in '" + whole + "'");
      coef_part.pop_back();
      coefficient = parse_rational(coef_part);
    }
    if (rest.empty()) {
      exponent = 1;
    } else if (rest[0] == '^') {
      exponent = parse_exponent(rest.substr(1), whole);
    } else {
      throw std::invalid_argument("unexpected text after x in '" + whole + "'");
    }
  }
  return {exponent, negative ? Rational(-coefficient) : coefficient};
}

}  // namespace

LacunaryPolynomial LacunaryPolynomial::parse(std::string_view text) {
  const std::string whole(text);
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw std::invalid_argument("empty polynomial");

  std::vector<Term> terms;
  std::string current;
  for (std::size_t i = 0; i < compact.size(); ++i) {
    char c = compact[i];
    bool splits = (c == '+' || c == '-') && !current.empty() && current.back() != '^' && current.back() != '*' &&
                  current.back() != '/' && current.back() != '+' && current.back() != '-' && current.back() != 'e' && current.back() != 'E';
    if (splits) {
      terms.push_back(parse_term(current, whole));
      current.clear();
    }
    current += c;
  }
  terms.push_back(parse_term(current, whole));
  return LacunaryPolynomial(std::move(terms));
}

Polynomial LacunaryPolynomial::to_dense() const {
  if (terms_.empty()) return {};
  std::vector<Rational> coeffs(terms_.back().exponent + 1);
  for (const auto& t : terms_) coeffs[t.exponent] = t.coefficient;
  return Polynomial(std::move(coeffs));
}

std::string LacunaryPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    }
    out += lacunaria::to_string(c) + "*x^" + std::to_string(t.exponent);
  }
  return out;
}

Rational evaluate(const LacunaryPolynomial& p, const Rational& x) {
  Rational sum = 0;
  for (const auto& t : p.terms()) sum += t.coefficient * power(x, t.exponent);
  return sum;
}

std::size_t descartes_bound(const LacunaryPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("undefined for zero polynomial");
  std::size_t changes = 0;
  for (std::size_t i = 1; i < p.terms().size(); ++i) {
    if (sgn(p.terms()[i].coefficient) != sgn(p.terms()[i - 1].coefficient)) ++changes;
  }
  return changes;
}

namespace {

// Dense form with the x^{min exponent} factor removed; positive roots are unchanged.
Polynomial positive_root_carrier(const LacunaryPolynomial& p, unsigned degree_cap) {
  if (p.is_zero()) throw std::domain_error("undefined for zero polynomial");
  if (p.degree() > degree_cap) throw std::domain_error("degree too large for exact oracle");
  const unsigned shift = p.terms().front().exponent;
  std::vector<Rational> coeffs(p.degree() - shift + 1);
  for (const auto& t : p.terms()) coeffs[t.exponent - shift] = t.coefficient;
  return Polynomial(std::move(coeffs));
}

}  // namespace

std::size_t count_positive_roots(const LacunaryPolynomial& p, unsigned degree_cap) {
  return SturmSequence(positive_root_carrier(p, degree_cap)).count_positive_roots();
}

std::vector<RootInterval> isolate_positive_roots(const LacunaryPolynomial& p, const Rational& width,
                                                 unsigned degree_cap) {
  const Polynomial dense = positive_root_carrier(p, degree_cap);
  // 0 is not a root of the carrier, so the closed window [0, B] only picks up positive roots
  return isolate_real_roots(dense, Rational(0), cauchy_root_bound(dense), width);
}

bool vanishes_on(const LacunaryPolynomial& p, std::span<const Rational> points) {
  return std::all_of(points.begin(), points.end(), [&](const Rational& x) { return evaluate(p, x) == 0; });
}

}  // namespace lacunaria
