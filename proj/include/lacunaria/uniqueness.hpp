#pragma once

#include "lacunaria/gamma_set.hpp"
#include "lacunaria/lacunary_poly.hpp"
#include "lacunaria/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lacunaria {

/// Points sign * (-1)^k * t_k for 0 < t_1 < ... < t_N, k = 1..N.
/// With sign = +1 the first point is -t_1.
struct AlternatingSet {
  std::vector<Rational> generators;
  int sign = 1;
  std::vector<Rational> points;
};

AlternatingSet build_alternating(std::span<const Rational> generators, int sign);

/// An exponent set M and a nonzero P in P(M) vanishing on the probed points.
struct NonUniquenessWitness {
  GammaSet exponent_set;
  LacunaryPolynomial polynomial;
};

struct UniquenessResult {
  bool unique = true;
  std::optional<NonUniquenessWitness> witness;  // first failing M in lexicographic order
  std::size_t subsets_checked = 0;
};

/// Checks det V(points; M) != 0 exactly for every M in {0..exponent_cap}
/// with #M = #points. Requires distinct points and exponent_cap >= N - 1.
UniquenessResult is_uniqueness_set(std::span<const Rational> points, unsigned exponent_cap);

/// Every failing M (not just the first), in lexicographic order.
std::vector<NonUniquenessWitness> uniqueness_failures(std::span<const Rational> points, unsigned exponent_cap);

struct CounterexampleFailure {
  std::vector<int> pattern;  // sign of each point, by increasing |point|
  std::vector<Rational> points;
  NonUniquenessWitness witness;
};

struct CounterexampleSearch {
  std::size_t trials = 0;
  std::size_t determinants_checked = 0;
  std::vector<CounterexampleFailure> failures;
};

/// Random sign patterns that are neither alternating orientation, applied to
/// random increasing positive rational generators; every vanishing
/// determinant is reported. Reproducible for a fixed seed. Requires n >= 2.
CounterexampleSearch search_counterexample(std::size_t n, unsigned exponent_cap, std::size_t trials,
                                           std::uint64_t seed);

}  // namespace lacunaria
