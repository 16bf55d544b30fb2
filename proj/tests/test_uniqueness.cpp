#include "doctest.h"

#include "lacunaria/uniqueness.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace lacunaria;

namespace {

std::vector<Rational> random_generators(std::mt19937_64& rng, std::size_t n) {
  std::set<Rational> s;
  while (s.size() < n) s.insert(ratio(1 + static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 7)));
  return {s.begin(), s.end()};
}

std::vector<Rational> negated(std::vector<Rational> v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

TEST_CASE("build_alternating") {
  const std::vector<Rational> ts{1, 2};
  CHECK(build_alternating(ts, 1).points == std::vector<Rational>{-1, 2});
  CHECK(build_alternating(ts, -1).points == std::vector<Rational>{1, -2});
  const std::vector<Rational> halves{ratio(1, 2), ratio(3, 2), ratio(5, 2)};
  CHECK(build_alternating(halves, 1).points == std::vector<Rational>{ratio(-1, 2), ratio(3, 2), ratio(-5, 2)});

  const std::vector<Rational> flat{1, 1};
  const std::vector<Rational> nonpositive{0, 1};
  CHECK_THROWS_AS(build_alternating(flat, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_alternating(nonpositive, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_alternating(ts, 0), std::invalid_argument);
}

TEST_CASE("is_uniqueness_set examples") {
  const std::vector<Rational> a{-1, 2};
  auto r = is_uniqueness_set(a, 6);
  CHECK(r.unique);
  CHECK(r.subsets_checked == 21);
  CHECK_FALSE(r.witness.has_value());

  const std::vector<Rational> b{-1, 1};
  r = is_uniqueness_set(b, 2);
  CHECK_FALSE(r.unique);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->exponent_set == GammaSet{0, 2});
  CHECK(r.witness->polynomial == LacunaryPolynomial::parse("x^2 - 1"));

  const std::vector<Rational> c{1, -2};
  CHECK(is_uniqueness_set(c, 6).unique);

  CHECK_THROWS_AS(is_uniqueness_set(a, 0), std::invalid_argument);
  const std::vector<Rational> dup{1, 1};
  CHECK_THROWS_AS(is_uniqueness_set(dup, 4), std::invalid_argument);
}

TEST_CASE("alternating sets are uniqueness sets (reduced sweep)") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const auto ts = random_generators(rng, n);
      for (int sign : {1, -1}) {
        const auto s = build_alternating(ts, sign);
        CHECK_MESSAGE(is_uniqueness_set(s.points, 10).unique, "n=", n, " trial=", trial);
      }
    }
  }
}

TEST_CASE("negation symmetry and witness validity on mixed-sign sets") {
  std::mt19937_64 rng(8);
  int failures_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<Rational> pool{-3, -2, -1, ratio(-1, 2), ratio(1, 2), 1, 2, 3};
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Rational> pts(pool.begin(), pool.begin() + static_cast<long>(n));
    const auto direct = is_uniqueness_set(pts, 6);
    CHECK(direct.unique == is_uniqueness_set(negated(pts), 6).unique);
    for (const auto& w : uniqueness_failures(pts, 6)) {
      ++failures_seen;
      CHECK_FALSE(w.polynomial.is_zero());
      CHECK(vanishes_on(w.polynomial, pts));
      CHECK(w.exponent_set.size() == n);
    }
  }
  CHECK(failures_seen > 0);
}

TEST_CASE("positive point sets are always uniqueness sets") {
  std::mt19937_64 rng(13);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      CHECK(is_uniqueness_set(random_generators(rng, n), 10).unique);
    }
  }
}

TEST_CASE("search_counterexample") {
  // n = 2: only the same-sign patterns are probed, which never fail
  const auto two = search_counterexample(2, 8, 40, 42);
  CHECK(two.trials == 40);
  CHECK(two.failures.empty());
  CHECK(two.determinants_checked == 40 * 36);

  // direct probe of {-1, 1}
  const std::vector<Rational> pm{-1, 1};
  const auto f = uniqueness_failures(pm, 2);
  REQUIRE(f.size() == 1);
  CHECK(f[0].exponent_set == GammaSet{0, 2});

  // {-1, 1, 2}: (x^2 - 1)(x^2 - 4) lies in P({0,2,4}), so that M must be reported
  const std::vector<Rational> mixed{-1, 1, 2};
  const auto oracle = LacunaryPolynomial::parse("x^4 - 5*x^2 + 4");
  REQUIRE(vanishes_on(oracle, mixed));
  const auto g = uniqueness_failures(mixed, 4);
  CHECK(std::any_of(g.begin(), g.end(), [](const auto& w) { return w.exponent_set == GammaSet{0, 2, 4}; }));

  const auto a = search_counterexample(3, 6, 25, 7);
  const auto b = search_counterexample(3, 6, 25, 7);
  REQUIRE(a.failures.size() == b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    CHECK(a.failures[i].points == b.failures[i].points);
    CHECK(a.failures[i].witness.exponent_set == b.failures[i].witness.exponent_set);
    CHECK(vanishes_on(a.failures[i].witness.polynomial, a.failures[i].points));
  }
  for (const auto& fail : a.failures) {
    // no alternating pattern is ever probed
    bool alt = true;
    for (std::size_t k = 1; k < fail.pattern.size(); ++k) alt = alt && fail.pattern[k] != fail.pattern[k - 1];
    CHECK_FALSE(alt);
  }
  CHECK_THROWS_AS(search_counterexample(1, 4, 1, 0), std::invalid_argument);
}
