#pragma once

#include "lacunaria/gamma_set.hpp"
#include "lacunaria/polynomial.hpp"
#include "lacunaria/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lacunaria {

struct Interval {
  Rational a;
  Rational b;

  Interval(Rational lo, Rational hi);
  Rational length() const { return b - a; }
  /// "a,b" with exact rationals, re-parsable by parse.
  std::string to_string() const;
  static Interval parse(const std::string& text);
};

/// b - a <= #Gamma.
bool complete_L2(const GammaSet& gamma, const Interval& iv);

/// a < r(Gamma). Requires 0 in gamma and a > 0.
bool complete_C_symmetric(const GammaSet& gamma, const Rational& half_length);

enum class Verdict { frame, no_frame, inconclusive };

std::string to_string(Verdict v);

/// 2^-12.
double default_grid_step();

/// 1e-8: no_frame needs lower < threshold * upper plus an exact certificate.
inline constexpr double kFailureThreshold = 1e-8;

/// t-range [lo, hi] of the base interval (a, a+1) on which the first k
/// translates are active.
struct Regime {
  std::size_t k;
  Rational lo;
  Rational hi;
};

/// An exact root of the rank-drop polynomial inside a regime.
struct FrameCertificate {
  std::size_t k;
  Polynomial polynomial;
  RootInterval root;
};

struct SigmaSample {
  double t;
  double sigma_min;
  double sigma_max;
};

struct FrameEstimate {
  double lower = 0.0;  // estimate of A
  double upper = 0.0;  // estimate of B
  double grid_step = 0.0;
  double min_location = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::vector<Regime> regimes;
  std::vector<FrameCertificate> certificates;
  std::vector<SigmaSample> profile;  // coarse grid, all regimes, by increasing t
  bool exceeds_length = false;       // b - a > #Gamma, decided without a scan
};

/// Splits (a, a+1) into the regimes of the frame inequality for (a, b).
/// Requires 0 < b - a <= #Gamma.
std::vector<Regime> frame_regimes(const GammaSet& gamma, const Interval& iv);

/// Lower and upper frame bounds of E(Z, gamma) on L^2(a, b) from the extreme
/// singular values of V_k(t) = [(t+j)^gamma]_{gamma, j<k} over each regime.
FrameEstimate frame_bounds(const GammaSet& gamma, const Interval& iv, double grid_step = default_grid_step());

/// Largest a, to within resolution, with a frame verdict on (-a, a).
double frame_radius_scan(const GammaSet& gamma, double resolution, double grid_step = default_grid_step());

/// #Gamma / 2.
Rational cr_scan(const GammaSet& gamma);

/// F(t) = sum_j F_j(t - j) with every F_j supported in the base interval I.
struct PiecewiseWitness {
  GammaSet gamma;                   // the exponents F is orthogonal to
  Interval base;                    // (a, a+1)
  std::pair<double, double> piece;  // I, a dyadic subinterval of (a, a+delta)
  std::vector<double> samples;      // grid points of I
  std::vector<std::vector<double>> components;  // components[j][i] = F_j(samples[i]), j = 0..N
  double norm_squared = 0.0;        // ||F||_2^2
  double last_norm_squared = 0.0;   // ||F_N||_2^2 = |I|
  double max_pairing = 0.0;         // max over gamma, |n| <= 10 of |<F, t^gamma e^{2 pi i n t}>|
  double min_abs_det = 0.0;         // min |det V(t)| over the samples of I
  double max_abs_det = 0.0;         // max |det V(t)| over (a, a+delta)
};

/// Nonzero F in L^2(a, b) orthogonal to E(Z, gamma). Requires b - a > #Gamma.
/// grid is the sampling resolution used to locate I.
PiecewiseWitness noncompleteness_witness(const GammaSet& gamma, const Interval& iv, double grid = 1.0 / 256);

/// max over gamma in test, |n| <= n_range of |<F, t^gamma e^{2 pi i n t}>|,
/// by composite Gauss-Legendre on each translate I + j (64 nodes per unit
/// length). The components are re-solved at the quadrature nodes.
double witness_pairing_residual(const PiecewiseWitness& w, const GammaSet& test, int n_range = 10);

}  // namespace lacunaria
