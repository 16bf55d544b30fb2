#include "doctest.h"

#include "lacunaria/frame_analysis.hpp"
#include "lacunaria/obstructions.hpp"

#include <cmath>

using namespace lacunaria;

namespace {

Interval iv(const char* text) { return Interval::parse(text); }

std::vector<GammaSet> gammas_with_zero(unsigned cap, std::size_t max_size) {
  std::vector<GammaSet> out;
  for (std::size_t k = 1; k <= max_size; ++k) {
    for (const auto& g : subsets_of_size(cap, k)) {
      if (g.contains_zero()) out.push_back(g);
    }
  }
  return out;
}

// Smallest eigenvalue of the 2x2 Gram matrix of [[1, 1], [t, t+1]].
double sigma_min_sq_01(double t) {
  const double p = 1 + t * t;
  const double q = 1 + (t + 1) * (t + 1);
  const double r = 1 + t * (t + 1);
  return 0.5 * (p + q) - std::sqrt(0.25 * (p - q) * (p - q) + r * r);
}

}  // namespace

TEST_CASE("Interval") {
  const auto i = iv("-0.6,0.6");
  CHECK(i.a == ratio(-3, 5));
  CHECK(i.to_string() == "-3/5,3/5");
  CHECK(Interval::parse(i.to_string()).b == i.b);
  CHECK_THROWS_AS(iv("1,1"), std::invalid_argument);
  CHECK_THROWS_AS(iv("1"), std::invalid_argument);
}

TEST_CASE("completeness predicates") {
  CHECK(complete_L2(GammaSet{0, 2}, iv("0,2")));
  CHECK_FALSE(complete_L2(GammaSet{0, 2}, iv("0,2.5")));
  CHECK(complete_L2(GammaSet{0}, iv("-1/2,1/2")));
  // only the length matters
  CHECK(complete_L2(GammaSet{0, 2}, iv("100,102")));

  CHECK(complete_C_symmetric(GammaSet{0, 2}, ratio(2, 5)));
  CHECK_FALSE(complete_C_symmetric(GammaSet{0, 2}, ratio(1, 2)));
  CHECK(complete_C_symmetric(GammaSet{0, 1, 2, 3}, ratio(19, 10)));
  CHECK_THROWS_AS(complete_C_symmetric(GammaSet{1, 2}, 1), std::invalid_argument);
}

TEST_CASE("frame_regimes") {
  auto r = frame_regimes(GammaSet{0, 2}, iv("-0.6,0.6"));
  REQUIRE(r.size() == 2);
  CHECK(r[0].k == 2);
  CHECK(r[0].lo == ratio(-3, 5));
  CHECK(r[0].hi == ratio(-2, 5));
  CHECK(r[1].k == 1);
  CHECK(r[1].hi == ratio(2, 5));

  r = frame_regimes(GammaSet{0, 2}, iv("-0.4,0.4"));
  REQUIRE(r.size() == 1);
  CHECK(r[0].k == 1);

  r = frame_regimes(GammaSet{0, 1}, iv("0,2"));
  REQUIRE(r.size() == 1);
  CHECK(r[0].k == 2);
  CHECK(r[0].hi == 1);
}

TEST_CASE("frame_bounds examples") {
  auto e = frame_bounds(GammaSet{0}, iv("0,1"), 1e-3);
  CHECK(e.lower == doctest::Approx(1.0));
  CHECK(e.upper == doctest::Approx(1.0));
  CHECK(e.verdict == Verdict::frame);

  e = frame_bounds(GammaSet{0, 2}, iv("-0.6,0.6"));
  CHECK(e.verdict == Verdict::no_frame);
  REQUIRE(e.certificates.size() == 1);
  CHECK(e.certificates[0].root.exact);
  CHECK(e.certificates[0].root.lo == ratio(-1, 2));
  CHECK(e.certificates[0].polynomial == Polynomial({ratio(1, 2), 1}));
  CHECK(e.lower <= 1e-20);
  CHECK(e.min_location == -0.5);

  // V_1(t) = (1, t^2)^T, so sigma_min^2 = 1 + t^4 on [-0.4, 0.4]
  e = frame_bounds(GammaSet{0, 2}, iv("-0.4,0.4"));
  CHECK(e.verdict == Verdict::frame);
  CHECK(e.lower == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.upper == doctest::Approx(1.0 + std::pow(0.4, 4)).epsilon(1e-12));
  CHECK(e.certificates.empty());

  e = frame_bounds(GammaSet{0, 2}, iv("0,2.5"));
  CHECK(e.verdict == Verdict::no_frame);
  CHECK(e.exceeds_length);
}

TEST_CASE("frame_bounds lower bound against the closed-form 2x2 Gram matrix") {
  double oracle = 1e300;
  double at = 0.0;
  for (int i = 0; i <= 100000; ++i) {
    const double t = i / 100000.0;
    if (sigma_min_sq_01(t) < oracle) {
      oracle = sigma_min_sq_01(t);
      at = t;
    }
  }
  const auto e = frame_bounds(GammaSet{0, 1}, iv("0,2"));
  CHECK(e.verdict == Verdict::frame);
  CHECK(e.lower == doctest::Approx(oracle).epsilon(1e-6));
  CHECK(e.min_location == doctest::Approx(at).epsilon(1e-3));
}

TEST_CASE("frame_radius_scan examples") {
  CHECK(std::abs(frame_radius_scan(GammaSet{0, 2}, 1e-3) - 0.5) <= 1e-3);
  CHECK(std::abs(frame_radius_scan(GammaSet{0, 1}, 1e-3) - 1.0) <= 1e-3);
  CHECK(std::abs(frame_radius_scan(GammaSet{0, 1, 2, 3}, 1e-3) - 2.0) <= 1e-3);
}

TEST_CASE("cr_scan examples") {
  CHECK(cr_scan(GammaSet{0, 2}) == 1);
  CHECK(cr_scan(GammaSet{0}) == ratio(1, 2));
  CHECK(cr_scan(GammaSet{0, 1, 3, 5, 7}) == ratio(5, 2));
  CHECK(r_gamma(GammaSet{0, 1, 3, 5, 7}) == 1);
  // the closed form agrees with the completeness predicate at the boundary
  for (const GammaSet& g : {GammaSet{0}, GammaSet{0, 2}, GammaSet{1, 4, 6}}) {
    const Rational c = cr_scan(g);
    CHECK(complete_L2(g, Interval(-c, c)));
    CHECK_FALSE(complete_L2(g, Interval(-c - ratio(1, 1000), c)));
  }
}

TEST_CASE("frame radius equals r(Gamma) for small Gamma") {
  for (const auto& g : gammas_with_zero(8, 4)) {
    const double fr = frame_radius_scan(g, 1e-2, std::ldexp(1.0, -9));
    CHECK_MESSAGE(std::abs(fr - to_double(r_gamma(g))) <= 1e-2, g.to_string(), " fr=", fr);
    CHECK(to_double(cr_scan(g)) >= fr - 1e-2);
  }
}

TEST_CASE("lower frame bound does not increase as the interval grows") {
  for (const GammaSet& g : {GammaSet{0, 2}, GammaSet{0, 1, 3}, GammaSet{0, 1, 2, 3}, GammaSet{0, 4}}) {
    double previous = std::numeric_limits<double>::infinity();
    bool failed = false;
    for (int step = 1; step <= 24; ++step) {
      const Rational a = ratio(step, 10);
      const auto e = frame_bounds(g, Interval(-a, a), std::ldexp(1.0, -10));
      CHECK(e.lower >= 0.0);
      CHECK(e.lower <= e.upper);
      // the grid resolves sigma_min^2 to about 1e-8 relative
      CHECK_MESSAGE(e.lower <= previous + 1e-6 * e.upper, g.to_string(), " a=", to_string(a));
      if (failed) CHECK(e.verdict == Verdict::no_frame);
      failed = failed || e.verdict == Verdict::no_frame;
      previous = e.lower;
    }
  }
}

TEST_CASE("beyond r(Gamma) the mollified obstruction drives the frame ratio to 0") {
  for (const GammaSet& g : {GammaSet{0, 2}, GammaSet{0, 2, 4}}) {
    const Rational r = r_gamma(g);
    const Rational eps = ratio(1, 20);
    CHECK(frame_bounds(g, Interval(-r - eps, r + eps)).verdict == Verdict::no_frame);
    const auto m = to_measure(solve_lemma4(g));
    CHECK(m.max_abs_location() <= r);
    double previous = mollified_frame_ratio(m, g, 0.04);
    for (double rr : {0.02, 0.01}) {
      const double current = mollified_frame_ratio(m, g, rr);
      CHECK_MESSAGE(current / previous <= 0.75, g.to_string(), " r=", rr);
      previous = current;
    }
  }
}

TEST_CASE("noncompleteness_witness examples") {
  // V(t) = [1]: F = 1_{I+1} - 1_I
  auto w = noncompleteness_witness(GammaSet{0}, iv("0,1.5"));
  CHECK(w.piece.first == 0.0);
  CHECK(w.piece.second == 0.5);
  for (double f : w.components[0]) CHECK(f == doctest::Approx(-1.0));
  for (double f : w.components[1]) CHECK(f == 1.0);
  CHECK(w.max_pairing <= 1e-12);
  CHECK(w.norm_squared == doctest::Approx(1.0));

  // Gamma = {0, 1}: solving by hand gives F_0 = 1, F_1 = -2, F_2 = 1
  w = noncompleteness_witness(GammaSet{0, 1}, iv("-1,1.5"));
  CHECK(w.max_pairing <= 1e-6);
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    CHECK(w.components[0][i] == doctest::Approx(1.0));
    CHECK(w.components[1][i] == doctest::Approx(-2.0));
    CHECK(w.components[2][i] == doctest::Approx(1.0));
  }
  CHECK(w.piece.first >= -1.0);
  CHECK(w.piece.second <= -0.5);

  w = noncompleteness_witness(GammaSet{0, 2}, iv("0,2.5"));
  CHECK(w.max_pairing <= 1e-6);
  CHECK(w.norm_squared >= 0.01 * w.last_norm_squared);
  CHECK(w.min_abs_det >= 0.5 * w.max_abs_det);
  CHECK(w.piece.first >= 0.0);
  CHECK(w.piece.second <= 0.5);

  CHECK_THROWS_AS(noncompleteness_witness(GammaSet{0, 2}, iv("0,2")), std::invalid_argument);
}

TEST_CASE("witness orthogonality across Gamma") {
  for (const auto& g : gammas_with_zero(6, 3)) {
    const auto n = static_cast<long>(g.size());
    for (const Rational& a : {Rational(0), ratio(-7, 4), ratio(1, 3)}) {
      const auto w = noncompleteness_witness(g, Interval(a, a + n + ratio(3, 4)));
      CHECK_MESSAGE(w.max_pairing <= 1e-6, g.to_string(), " a=", to_string(a));
      CHECK(w.norm_squared >= 0.01 * w.last_norm_squared);
      CHECK(w.piece.second > w.piece.first);
    }
  }
  // orthogonality is specific to the exponents the witness was built for
  auto w = noncompleteness_witness(GammaSet{0, 2}, iv("0,2.5"));
  CHECK(witness_pairing_residual(w, GammaSet{0, 2}) <= 1e-6);
  CHECK(witness_pairing_residual(w, GammaSet{0, 1, 2}) > 1e-3);
}
