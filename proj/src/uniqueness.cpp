#include "lacunaria/uniqueness.hpp"

#include "lacunaria/parallel.hpp"
#include "lacunaria/vandermonde.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace lacunaria {

AlternatingSet build_alternating(std::span<const Rational> generators, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (generators.empty()) throw std::invalid_argument("at least one generator is required");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k] <= 0 || (k > 0 && generators[k] <= generators[k - 1])) {
      throw std::invalid_argument("generators must be positive and strictly increasing");
    }
  }
  AlternatingSet out{{generators.begin(), generators.end()}, sign, {}};
  for (std::size_t k = 0; k < generators.size(); ++k) {
    // k is zero-based, so the exponent of (-1) is k + 1
    const bool negate = (k % 2 == 0) == (sign == 1);
    out.points.push_back(negate ? Rational(-generators[k]) : generators[k]);
  }
  return out;
}

namespace {

void check_points(std::span<const Rational> points, unsigned exponent_cap) {
  if (points.empty()) throw std::invalid_argument("point set must be nonempty");
  if (exponent_cap + 1 < points.size()) {
    throw std::invalid_argument("exponent cap must be at least #points - 1");
  }
  std::set<Rational> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw std::invalid_argument("points must be pairwise distinct");
}

std::optional<NonUniquenessWitness> probe(std::span<const Rational> points, const GammaSet& m) {
  const GeneralizedVandermonde v(std::vector<Rational>(points.begin(), points.end()), m);
  if (det_exact(v) != 0) return std::nullopt;
  const auto a = null_vector(v);
  return NonUniquenessWitness{m, witness_polynomial(m, *a)};
}

// Exact determinant for every subset, evaluated in parallel into fixed slots.
std::vector<std::optional<NonUniquenessWitness>> probe_all(std::span<const Rational> points,
                                                           const std::vector<GammaSet>& subsets) {
  std::vector<std::optional<NonUniquenessWitness>> slots(subsets.size());
  parallel_for(subsets.size(), [&](std::size_t i) { slots[i] = probe(points, subsets[i]); });
  return slots;
}

}  // namespace

UniquenessResult is_uniqueness_set(std::span<const Rational> points, unsigned exponent_cap) {
  check_points(points, exponent_cap);
  const auto subsets = subsets_of_size(exponent_cap, points.size());
  auto slots = probe_all(points, subsets);
  UniquenessResult result;
  result.subsets_checked = subsets.size();
  for (auto& slot : slots) {
    if (slot) {
      result.unique = false;
      result.witness = std::move(slot);
      break;
    }
  }
  return result;
}

std::vector<NonUniquenessWitness> uniqueness_failures(std::span<const Rational> points, unsigned exponent_cap) {
  check_points(points, exponent_cap);
  std::vector<NonUniquenessWitness> failures;
  for (auto& slot : probe_all(points, subsets_of_size(exponent_cap, points.size()))) {
    if (slot) failures.push_back(std::move(*slot));
  }
  return failures;
}

CounterexampleSearch search_counterexample(std::size_t n, unsigned exponent_cap, std::size_t trials,
                                           std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("counterexample search needs n >= 2");
  if (exponent_cap + 1 < n) throw std::invalid_argument("exponent cap must be at least n - 1");

  std::mt19937_64 rng(seed);
  auto is_alternating = [n](const std::vector<int>& pattern) {
    bool plus = true;
    bool minus = true;
    for (std::size_t k = 0; k < n; ++k) {
      const int alt = k % 2 == 0 ? -1 : 1;
      plus = plus && pattern[k] == alt;
      minus = minus && pattern[k] == -alt;
    }
    return plus || minus;
  };

  const auto subsets = subsets_of_size(exponent_cap, n);
  CounterexampleSearch report;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<int> pattern(n);
    do {
      for (auto& s : pattern) s = (rng() & 1) ? 1 : -1;
    } while (is_alternating(pattern));

    std::set<Rational> generators;
    while (generators.size() < n) {
      generators.insert(ratio(1 + static_cast<long>(rng() % 60), 1 + static_cast<long>(rng() % 8)));
    }
    std::vector<Rational> points;
    std::size_t k = 0;
    for (const auto& t : generators) points.push_back(pattern[k++] > 0 ? t : Rational(-t));

    ++report.trials;
    report.determinants_checked += subsets.size();
    for (auto& slot : probe_all(points, subsets)) {
      if (slot) report.failures.push_back({pattern, points, std::move(*slot)});
    }
  }
  return report;
}

}  // namespace lacunaria
