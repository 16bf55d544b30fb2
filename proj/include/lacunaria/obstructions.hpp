#pragma once

#include "lacunaria/gamma_set.hpp"
#include "lacunaria/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace lacunaria {

struct ComplexRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
  bool operator==(const ComplexRational&) const = default;
};

struct Atom {
  Rational location;
  ComplexRational weight;
};

/// Finitely supported complex measure sum_j w_j delta_{t_j}. Locations are
/// kept sorted and pairwise distinct; atoms with zero weight are dropped.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool is_zero() const { return atoms_.empty(); }
  Rational max_abs_location() const;

  /// Inverse transform g(x) = sum_j w_j e^{-2 pi i x t_j} and its p-th derivative.
  std::complex<double> transform_derivative(unsigned p, double x) const;

  /// One "location,re,im" row per atom, with a header line.
  std::string to_csv() const;

 private:
  std::vector<Atom> atoms_;
};

/// sin(pi y) and cos(pi y), exact at multiples of 1/2.
double sin_pi(double y);
double cos_pi(double y);

enum class ParityCase { odd_deficient, even_deficient };

std::string to_string(ParityCase c);

/// odd_deficient:  f(x) = sin(pi x) + sum_k alpha_k sin((2k+1) pi x)
/// even_deficient: f(x) = 1 + sum_k alpha_k cos(2 pi k x)
struct TrigObstruction {
  ParityCase parity_case = ParityCase::even_deficient;
  std::vector<Rational> alphas;
  GammaSet gamma;

  /// f^{(order)}(x) in closed form.
  double derivative(unsigned order, double x) const;
  /// sum over terms of |amplitude| * frequency^order, the natural size of f^{(order)}.
  double derivative_scale(unsigned order) const;
  /// Largest |frequency| / (2 pi), i.e. the radius of the spectral support.
  Rational support_radius() const;
};

/// Solves the interpolation system exactly. Requires 0 in gamma.
TrigObstruction solve_lemma4(const GammaSet& gamma);

/// max over gamma, |n| <= n_range of |f^{(gamma)}(n)| / derivative_scale(gamma).
double residual_interpolation(const TrigObstruction& f, int n_range = 8);

DiscreteMeasure to_measure(const TrigObstruction& f);

/// max over gamma, |n| <= n_range of |sum_j w_j t_j^gamma e^{-2 pi i n t_j}|,
/// each divided by sum_j |w_j| |t_j|^gamma (0^0 = 1).
double orthogonality_residual(const DiscreteMeasure& m, const GammaSet& gamma, int n_range = 8);

/// True if sum_j w_j t_j^gamma = 0 exactly for every gamma.
bool moments_vanish_exactly(const DiscreteMeasure& m, const GammaSet& gamma);

/// Atoms at alpha, alpha+1, ..., alpha+N spanning the null space of the
/// N x (N+1) system sum_j a_j (alpha+j)^gamma = 0; primitive integer weights,
/// first weight positive.
DiscreteMeasure grid_null_measure(const GammaSet& gamma, const Rational& alpha);

/// d^j/dy^j of sin(y)/y.
double sinc_derivative(unsigned j, double y);

/// phi^{(j)}(x) for phi(x) = sin(pi r x) / (pi r x).
double mollifier_derivative(unsigned j, double r, double x);

/// sum over |n| <= n_range of phi^{(j)}(n)^2.
double mollifier_derivative_sum(unsigned j, double r, int n_range = 64);

/// ||g phi||_2^2, computed exactly on the transform side: g phi is the
/// transform of m convolved with 1_{(-r/2, r/2)} / r.
double mollified_norm_squared(const DiscreteMeasure& m, double r);

struct QuadratureNorm {
  double value;
  double tail_bound;  // bound on the mass outside [-half_width, half_width]
};

/// The same norm by composite Gauss-Legendre (64 nodes per unit) on
/// [-half_width, half_width].
QuadratureNorm mollified_norm_squared_quadrature(const DiscreteMeasure& m, double r, double half_width);

/// [sum_{|n| <= n_range} sum_gamma |(g phi)^{(gamma)}(n)|^2] / ||g phi||_2^2.
/// Throws std::invalid_argument unless 0 < r < 1/2 and m is orthogonal to
/// E(Z, gamma) (residual at most 1e-9).
double mollified_frame_ratio(const DiscreteMeasure& m, const GammaSet& gamma, double r, int n_range = 64);

struct MollifierBoundRow {
  unsigned j;
  double r;
  double sum;
  double bound;  // C^j r^j with the fitted C
};

struct MollifierBoundFit {
  double constant;  // C fitted on the largest r
  std::vector<MollifierBoundRow> rows;
  bool holds;  // sum <= bound on every row
};

/// Fits C in sum_n |phi^{(j)}(n)|^2 <= C^j r^j on rs.front() (the largest r)
/// for 1 <= j <= max_j, then checks the bound on every r in rs.
MollifierBoundFit fit_mollifier_bound(unsigned max_j, const std::vector<double>& rs, int n_range = 64);

}  // namespace lacunaria
