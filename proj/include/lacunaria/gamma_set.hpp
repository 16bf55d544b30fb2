#pragma once

#include "lacunaria/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lacunaria {

/// Finite set of polynomial weights (a gap set Γ or an exponent set M):
/// nonempty, nonnegative, strictly increasing.
class GammaSet {
 public:
  explicit GammaSet(std::vector<unsigned> exponents);
  GammaSet(std::initializer_list<unsigned> exponents) : GammaSet(std::vector<unsigned>(exponents)) {}

  /// "0,2,5". Unsorted or duplicated input is rejected, not repaired.
  static GammaSet parse(std::string_view text);

  std::span<const unsigned> exponents() const { return exponents_; }
  std::size_t size() const { return exponents_.size(); }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  unsigned max() const { return exponents_.back(); }
  bool contains(unsigned exponent) const;
  bool contains_zero() const { return exponents_.front() == 0; }

  std::string to_string() const;

  auto begin() const { return exponents_.begin(); }
  auto end() const { return exponents_.end(); }

  friend bool operator==(const GammaSet&, const GammaSet&) = default;

 private:
  std::vector<unsigned> exponents_;
};

/// Parity classes of Γ. Either class may be empty.
struct ParitySplit {
  std::vector<unsigned> even;
  std::vector<unsigned> odd;
};

ParitySplit parity_split(const GammaSet& gamma);

/// #Γ_odd + 1/2 if #Γ_odd < #Γ_even, otherwise #Γ_even.
Rational r_gamma(const GammaSet& gamma);

/// All k-element subsets of {0, ..., cap}, in lexicographic order.
std::vector<GammaSet> subsets_of_size(unsigned cap, std::size_t k);

}  // namespace lacunaria
