#include "lacunaria/obstructions.hpp"

#include "lacunaria/exact_linalg.hpp"
#include "lacunaria/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lacunaria {

namespace {

constexpr double kPi = std::numbers::pi;

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational fractional_part(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rational(fl);
}

// e^{-2 pi i x t}; the phase is reduced exactly when x is an integer.
std::complex<double> unit_phase(const Rational& t, double x) {
  double turns;
  if (std::nearbyint(x) == x && std::abs(x) < 9.0e15) {
    turns = to_double(fractional_part(Rational(static_cast<long>(x)) * t));
  } else {
    turns = x * to_double(t);
    turns -= std::floor(turns);
  }
  return {cos_pi(2.0 * turns), -sin_pi(2.0 * turns)};
}

double binomial(unsigned n, unsigned k) {
  double b = 1.0;
  for (unsigned i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
  return b;
}

struct TrigTerm {
  double amplitude;
  unsigned multiplier;  // frequency in units of pi
  double phase;         // 0 for sin, 1/2 for cos, in units of pi
};

std::vector<TrigTerm> trig_terms(const TrigObstruction& f) {
  std::vector<TrigTerm> terms;
  const bool odd = f.parity_case == ParityCase::odd_deficient;
  terms.push_back({1.0, odd ? 1u : 0u, odd ? 0.0 : 0.5});
  for (std::size_t k = 1; k <= f.alphas.size(); ++k) {
    const auto m = static_cast<unsigned>(odd ? 2 * k + 1 : 2 * k);
    terms.push_back({to_double(f.alphas[k - 1]), m, odd ? 0.0 : 0.5});
  }
  return terms;
}

}  // namespace

double sin_pi(double y) {
  const double r = std::remainder(y, 2.0);  // exact, in [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(kPi * r);
}

double cos_pi(double y) {
  const double r = std::remainder(y, 2.0);
  if (r == 0.5 || r == -0.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 1.0 || r == -1.0) return -1.0;
  return std::cos(kPi * r);
}

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) {
  for (auto& a : atoms) {
    if (!a.weight.is_zero()) atoms_.push_back(std::move(a));
  }
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& x, const Atom& y) { return x.location < y.location; });
  for (std::size_t i = 1; i < atoms_.size(); ++i) {
    if (atoms_[i].location == atoms_[i - 1].location) {
      throw std::invalid_argument("atom locations must be pairwise distinct");
    }
  }
}

Rational DiscreteMeasure::max_abs_location() const {
  Rational best = 0;
  for (const auto& a : atoms_) best = std::max(best, abs_rational(a.location));
  return best;
}

std::complex<double> DiscreteMeasure::transform_derivative(unsigned p, double x) const {
  std::complex<double> sum = 0.0;
  for (const auto& a : atoms_) {
    const std::complex<double> base(0.0, -2.0 * kPi * to_double(a.location));
    std::complex<double> factor = 1.0;
    for (unsigned i = 0; i < p; ++i) factor *= base;
    sum += a.weight.to_complex() * factor * unit_phase(a.location, x);
  }
  return sum;
}

std::string DiscreteMeasure::to_csv() const {
  std::ostringstream out;
  out << "location,re,im\n";
  for (const auto& a : atoms_) {
    out << to_string(a.location) << ',' << to_string(a.weight.re) << ',' << to_string(a.weight.im) << '\n';
  }
  return out.str();
}

std::string to_string(ParityCase c) { return c == ParityCase::odd_deficient ? "odd_deficient" : "even_deficient"; }

double TrigObstruction::derivative(unsigned order, double x) const {
  double sum = 0.0;
  for (const auto& t : trig_terms(*this)) {
    if (t.multiplier == 0 && order > 0) continue;
    const double m = static_cast<double>(t.multiplier);
    sum += t.amplitude * std::pow(m * kPi, static_cast<double>(order)) *
           sin_pi(m * x + t.phase + 0.5 * static_cast<double>(order));
  }
  return sum;
}

double TrigObstruction::derivative_scale(unsigned order) const {
  double scale = 0.0;
  for (const auto& t : trig_terms(*this)) {
    if (t.multiplier == 0 && order > 0) continue;
    scale += std::abs(t.amplitude) * std::pow(static_cast<double>(t.multiplier) * kPi, static_cast<double>(order));
  }
  return scale;
}

Rational TrigObstruction::support_radius() const {
  const auto k = static_cast<long>(alphas.size());
  if (parity_case == ParityCase::odd_deficient) return ratio(2 * k + 1, 2);
  return Rational(k);
}

TrigObstruction solve_lemma4(const GammaSet& gamma) {
  if (!gamma.contains_zero()) throw std::invalid_argument("the obstruction needs 0 in Gamma");
  const auto split = parity_split(gamma);
  TrigObstruction f{split.odd.size() < split.even.size() ? ParityCase::odd_deficient : ParityCase::even_deficient,
                    {}, gamma};
  const bool odd = f.parity_case == ParityCase::odd_deficient;
  const auto& rows = odd ? split.odd : split.even;
  const std::size_t size = rows.size();
  if (size == 0) return f;

  // The common factors pi^gamma (odd case) or (2 pi)^gamma (even case) are
  // divided out, leaving integer nodes 2k+1 or k.
  RationalMatrix a(size, RationalVector(size));
  RationalVector rhs(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t k = 1; k <= size; ++k) {
      a[i][k - 1] = power(Rational(static_cast<long>(odd ? 2 * k + 1 : k)), rows[i]);
    }
    rhs[i] = odd ? Rational(-1) : Rational(rows[i] == 0 ? -1 : 0);
  }
  if (determinant(a) == 0) throw std::logic_error("interpolation system is singular");
  f.alphas = *solve(a, rhs);
  return f;
}

double residual_interpolation(const TrigObstruction& f, int n_range) {
  double worst = 0.0;
  for (unsigned g : f.gamma) {
    const double scale = f.derivative_scale(g);
    for (int n = -n_range; n <= n_range; ++n) {
      worst = std::max(worst, std::abs(f.derivative(g, static_cast<double>(n))) / scale);
    }
  }
  return worst;
}

DiscreteMeasure to_measure(const TrigObstruction& f) {
  std::vector<Atom> atoms;
  const bool odd = f.parity_case == ParityCase::odd_deficient;
  auto add = [&](const Rational& amplitude, long multiplier) {
    if (!odd && multiplier == 0) {
      atoms.push_back({0, {amplitude, 0}});
      return;
    }
    const Rational t = ratio(multiplier, 2);
    if (odd) {
      // a sin(m pi x) = (i a / 2) e^{-2 pi i x (m/2)} - (i a / 2) e^{2 pi i x (m/2)}
      atoms.push_back({t, {0, amplitude / 2}});
      atoms.push_back({-t, {0, -amplitude / 2}});
    } else {
      atoms.push_back({t, {amplitude / 2, 0}});
      atoms.push_back({-t, {amplitude / 2, 0}});
    }
  };
  add(1, odd ? 1 : 0);
  for (std::size_t k = 1; k <= f.alphas.size(); ++k) {
    add(f.alphas[k - 1], static_cast<long>(odd ? 2 * k + 1 : 2 * k));
  }
  return DiscreteMeasure(std::move(atoms));
}

double orthogonality_residual(const DiscreteMeasure& m, const GammaSet& gamma, int n_range) {
  double worst = 0.0;
  for (unsigned g : gamma) {
    double scale = 0.0;
    for (const auto& a : m.atoms()) {
      scale += std::abs(a.weight.to_complex()) * std::pow(std::abs(to_double(a.location)), static_cast<double>(g));
    }
    if (scale == 0.0) continue;
    for (int n = -n_range; n <= n_range; ++n) {
      std::complex<double> sum = 0.0;
      for (const auto& a : m.atoms()) {
        sum += a.weight.to_complex() * std::pow(to_double(a.location), static_cast<double>(g)) *
               unit_phase(a.location, static_cast<double>(n));
      }
      worst = std::max(worst, std::abs(sum) / scale);
    }
  }
  return worst;
}

bool moments_vanish_exactly(const DiscreteMeasure& m, const GammaSet& gamma) {
  for (unsigned g : gamma) {
    Rational re = 0;
    Rational im = 0;
    for (const auto& a : m.atoms()) {
      const Rational p = power(a.location, g);
      re += a.weight.re * p;
      im += a.weight.im * p;
    }
    if (re != 0 || im != 0) return false;
  }
  return true;
}

DiscreteMeasure grid_null_measure(const GammaSet& gamma, const Rational& alpha) {
  const std::size_t n = gamma.size();
  RationalMatrix system(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) system[i][j] = power(alpha + static_cast<long>(j), gamma[i]);
  }
  const auto basis = null_space(system);
  const auto weights = primitive_integer_vector(basis.front(), SignConvention::first_positive);
  std::vector<Atom> atoms;
  for (std::size_t j = 0; j <= n; ++j) atoms.push_back({alpha + static_cast<long>(j), {weights[j], 0}});
  return DiscreteMeasure(std::move(atoms));
}

double sinc_derivative(unsigned j, double y) {
  if (std::abs(y) < static_cast<double>(j) + 1.0) {
    // sum over 2m >= j of (-1)^m y^{2m-j} / ((2m+1) (2m-j)!)
    double sum = 0.0;
    const unsigned m0 = (j + 1) / 2;
    double power_over_factorial = 1.0;  // y^{2m-j} / (2m-j)!
    if (2 * m0 > j) power_over_factorial = y;
    for (unsigned m = m0; m < m0 + 200; ++m) {
      const unsigned e = 2 * m - j;
      if (m > m0) power_over_factorial *= y * y / (static_cast<double>(e) * static_cast<double>(e - 1));
      const double term = (m % 2 == 0 ? 1.0 : -1.0) * power_over_factorial / (2.0 * m + 1.0);
      sum += term;
      if (static_cast<double>(e) > std::abs(y) && std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
    }
    return sum;
  }
  // y s^{(k)} + k s^{(k-1)} = sin^{(k)}(y), stable once |y| > j
  double s = std::sin(y) / y;
  for (unsigned k = 1; k <= j; ++k) {
    s = (std::sin(y + 0.5 * kPi * static_cast<double>(k)) - static_cast<double>(k) * s) / y;
  }
  return s;
}

double mollifier_derivative(unsigned j, double r, double x) {
  return std::pow(kPi * r, static_cast<double>(j)) * sinc_derivative(j, kPi * r * x);
}

double mollifier_derivative_sum(unsigned j, double r, int n_range) {
  std::vector<double> terms;
  for (int n = -n_range; n <= n_range; ++n) {
    const double v = mollifier_derivative(j, r, static_cast<double>(n));
    terms.push_back(v * v);
  }
  return pairwise_sum(terms);
}

double mollified_norm_squared(const DiscreteMeasure& m, double r) {
  std::vector<double> terms;
  for (const auto& a : m.atoms()) {
    for (const auto& b : m.atoms()) {
      const double overlap = std::max(0.0, r - std::abs(to_double(a.location) - to_double(b.location)));
      if (overlap == 0.0) continue;
      terms.push_back((a.weight.to_complex() * std::conj(b.weight.to_complex())).real() * overlap);
    }
  }
  return pairwise_sum(terms) / (r * r);
}

QuadratureNorm mollified_norm_squared_quadrature(const DiscreteMeasure& m, double r, double half_width) {
  const auto units = static_cast<std::size_t>(std::ceil(2.0 * half_width));
  const double value = integrate(-half_width, half_width, 4 * units, 16, [&](double x) {
    const double g = std::abs(m.transform_derivative(0, x));
    const double phi = mollifier_derivative(0, r, x);
    return g * g * phi * phi;
  });
  double total = 0.0;
  for (const auto& a : m.atoms()) total += std::abs(a.weight.to_complex());
  const double tail = 2.0 * total * total / (kPi * kPi * r * r * half_width);
  return {value, tail};
}

double mollified_frame_ratio(const DiscreteMeasure& m, const GammaSet& gamma, double r, int n_range) {
  if (!(r > 0.0 && r < 0.5)) throw std::invalid_argument("mollifier width r must satisfy 0 < r < 1/2");
  if (m.is_zero()) throw std::invalid_argument("measure must be nonzero");
  if (orthogonality_residual(m, gamma, n_range) > 1e-9) {
    throw std::invalid_argument("measure is not orthogonal to E(Z, Gamma)");
  }
  const unsigned top = gamma.max();
  std::vector<double> terms;
  for (int n = -n_range; n <= n_range; ++n) {
    const double x = static_cast<double>(n);
    std::vector<std::complex<double>> g(top + 1);
    std::vector<double> phi(top + 1);
    for (unsigned p = 0; p <= top; ++p) {
      g[p] = m.transform_derivative(p, x);
      phi[p] = mollifier_derivative(p, r, x);
    }
    for (unsigned gm : gamma) {
      std::complex<double> d = 0.0;
      for (unsigned p = 0; p <= gm; ++p) d += binomial(gm, p) * g[p] * phi[gm - p];
      terms.push_back(std::norm(d));
    }
  }
  return pairwise_sum(terms) / mollified_norm_squared(m, r);
}

MollifierBoundFit fit_mollifier_bound(unsigned max_j, const std::vector<double>& rs, int n_range) {
  if (rs.empty() || max_j == 0) throw std::invalid_argument("need at least one r and max_j >= 1");
  MollifierBoundFit fit{0.0, {}, true};
  const double r0 = rs.front();
  for (unsigned j = 1; j <= max_j; ++j) {
    const double s = mollifier_derivative_sum(j, r0, n_range);
    fit.constant = std::max(fit.constant, std::pow(s / std::pow(r0, j), 1.0 / j));
  }
  for (double r : rs) {
    for (unsigned j = 1; j <= max_j; ++j) {
      const double s = mollifier_derivative_sum(j, r, n_range);
      const double bound = std::pow(fit.constant * r, static_cast<double>(j));
      fit.rows.push_back({j, r, s, bound});
      fit.holds = fit.holds && s <= bound * (1.0 + 1e-12);
    }
  }
  return fit;
}

}  // namespace lacunaria
