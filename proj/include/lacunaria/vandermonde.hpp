#pragma once

#include "lacunaria/exact_linalg.hpp"
#include "lacunaria/gamma_set.hpp"
#include "lacunaria/lacunary_poly.hpp"
#include "lacunaria/polynomial.hpp"
#include "lacunaria/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lacunaria {

/// Default cap on #Γ for the symbolic determinant in the shift variable.
inline constexpr std::size_t kDefaultDetInSCap = 6;

/// 2^-40, the default width of isolating intervals for exceptional shifts.
Rational default_root_width();

/// Square matrix with entry (i, j) = nodes[j]^{exponents[i]} (0^0 = 1).
/// Entries are recomputed from the fields on demand.
class GeneralizedVandermonde {
 public:
  GeneralizedVandermonde(std::vector<Rational> nodes, GammaSet exponents);

  const std::vector<Rational>& nodes() const { return nodes_; }
  const GammaSet& exponents() const { return exponents_; }
  std::size_t size() const { return nodes_.size(); }

  Rational entry(std::size_t row, std::size_t col) const { return power(nodes_[col], exponents_[row]); }
  RationalMatrix matrix() const;

 private:
  std::vector<Rational> nodes_;
  GammaSet exponents_;
};

/// Exact determinant. Columns are cleared of denominators and reduced with
/// Bareiss elimination, so no intermediate fractions appear.
Rational det_exact(const GeneralizedVandermonde& m);

bool is_invertible(const GeneralizedVandermonde& m);

/// Nonzero a with sum_i a_i x^{γ_i} vanishing at every node, scaled to coprime
/// integers with a positive top coefficient; nullopt when m is invertible.
std::optional<RationalVector> null_vector(const GeneralizedVandermonde& m);

/// The lacunary polynomial sum_i a_i x^{γ_i} carried by a null vector.
LacunaryPolynomial witness_polynomial(const GammaSet& exponents, const RationalVector& a);

/// True iff every minor of order <= max_order is strictly positive. Requires
/// positive, strictly increasing nodes; throws std::invalid_argument otherwise.
bool verify_total_positivity(const GeneralizedVandermonde& m, std::size_t max_order);

/// Number of minors of order 1..max_order in an n x n matrix.
std::size_t minor_count(std::size_t n, std::size_t max_order);

/// q(s) = det V((s, s+1, ..., s+N-1); Γ) as an exact polynomial in s.
struct DetPolynomial {
  GammaSet gamma;
  Polynomial poly;
  Rational operator()(const Rational& s) const { return poly(s); }
};

DetPolynomial det_in_s(const GammaSet& gamma, std::size_t cap = kDefaultDetInSCap);

/// Monic gcd of all k x k minors of the #Γ x k matrix [(s+j)^{γ_i}], j < k.
/// Its real roots are exactly the shifts where that matrix loses full column
/// rank. For k = #Γ it is det_in_s up to a constant factor.
Polynomial rank_drop_polynomial(const GammaSet& gamma, std::size_t k, std::size_t cap = kDefaultDetInSCap);

/// Real roots of det_in_s strictly inside (lo, hi), isolated to `width`.
std::vector<RootInterval> exceptional_set(const GammaSet& gamma, const Rational& lo, const Rational& hi,
                                          const Rational& width = default_root_width(),
                                          std::size_t cap = kDefaultDetInSCap);

struct SingularExtremes {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

/// Extreme singular values of the #Γ x k matrix [node_j^{γ_i}], computed on
/// the matrix scaled by its largest entry and rescaled afterwards.
SingularExtremes singular_extremes(std::span<const double> nodes, const GammaSet& gamma, std::size_t k);

}  // namespace lacunaria
