#pragma once

#include "lacunaria/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lacunaria {

/// Dense univariate polynomial over the rationals, coefficients stored by
/// ascending degree with no trailing zeros. The zero polynomial has no
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// (x + shift)^n expanded with binomial coefficients.
  static Polynomial shifted_power(const Rational& shift, unsigned n);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(char variable = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

DivisionResult divide(const Polynomial& numerator, const Polynomial& denominator);
/// Monic gcd; gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p'): same distinct roots, all simple.
Polynomial square_free_part(const Polynomial& p);

/// Canonical Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  /// Sign variations of the chain at x (zeros skipped).
  std::size_t variations_at(const Rational& x) const;
  std::size_t variations_at_positive_infinity() const;
  std::size_t variations_at_negative_infinity() const;

  /// Distinct real roots in the half-open interval (lo, hi].
  std::size_t count_roots(const Rational& lo, const Rational& hi) const;
  std::size_t count_positive_roots() const;
  std::size_t count_real_roots() const;

  const std::vector<Polynomial>& chain() const { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

/// A real root located in [lo, hi]. When `exact` is set the root equals lo == hi.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact = false;
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Isolates every distinct real root of p in the closed window [lo, hi],
/// bisecting until each interval is narrower than `width` (or collapses onto
/// an exact rational root). Sorted by location. p must be nonzero.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                             const Rational& width);

/// Bound B with every real root of p inside [-B, B] (Cauchy bound).
Rational cauchy_root_bound(const Polynomial& p);

}  // namespace lacunaria
