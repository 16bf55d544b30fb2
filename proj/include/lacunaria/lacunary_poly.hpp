#pragma once

#include "lacunaria/gamma_set.hpp"
#include "lacunaria/polynomial.hpp"
#include "lacunaria/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lacunaria {

struct Term {
  unsigned exponent = 0;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Default cap on the dense degree accepted by the exact root oracle.
inline constexpr unsigned kDefaultDegreeCap = 64;

/// Sparse real polynomial sum c_j x^{m_j} with exponents drawn from a declared
/// exponent set M. Terms are kept canonical: sorted by exponent, nonzero
/// coefficients only, so the zero polynomial has no terms.
class LacunaryPolynomial {
 public:
  /// Exponent set M is taken to be the exponents of the (nonzero) terms.
  explicit LacunaryPolynomial(std::vector<Term> terms);
  /// coefficients[j] multiplies x^{M[j]}; zero coefficients are allowed and dropped.
  LacunaryPolynomial(const GammaSet& exponent_set, std::span<const Rational> coefficients);

  /// "c0*x^m0 + c1*x^m1 + ...", coefficients "p/q"; also accepts "x^2 - 1", "3", "-x".
  static LacunaryPolynomial parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  /// Declared M. Empty only for a zero polynomial built from no terms.
  const std::vector<unsigned>& exponent_set() const { return declared_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.back().exponent; }

  Polynomial to_dense() const;
  std::string to_string() const;

  friend bool operator==(const LacunaryPolynomial& a, const LacunaryPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  void canonicalize();
  std::vector<Term> terms_;
  std::vector<unsigned> declared_;
};

/// Exact value, with 0^0 = 1.
Rational evaluate(const LacunaryPolynomial& p, const Rational& x);

/// Sign changes of the coefficient sequence ordered by exponent.
std::size_t descartes_bound(const LacunaryPolynomial& p);

/// Distinct roots in (0, inf), counted with a Sturm sequence over the rationals.
std::size_t count_positive_roots(const LacunaryPolynomial& p, unsigned degree_cap = kDefaultDegreeCap);

/// Isolating intervals (width below `width`) for the distinct positive roots.
std::vector<RootInterval> isolate_positive_roots(const LacunaryPolynomial& p, const Rational& width,
                                                 unsigned degree_cap = kDefaultDegreeCap);

bool vanishes_on(const LacunaryPolynomial& p, std::span<const Rational> points);

}  // namespace lacunaria
