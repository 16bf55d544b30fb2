#include "lacunaria/frame_analysis.hpp"

#include "lacunaria/parallel.hpp"
#include "lacunaria/quadrature.hpp"
#include "lacunaria/vandermonde.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace lacunaria {

Interval::Interval(Rational lo, Rational hi) : a(std::move(lo)), b(std::move(hi)) {
  if (!(a < b)) throw std::invalid_argument("interval needs a < b");
}

std::string Interval::to_string() const { return lacunaria::to_string(a) + "," + lacunaria::to_string(b); }

Interval Interval::parse(const std::string& text) {
  const auto v = parse_rational_list(text);
  if (v.size() != 2) throw std::invalid_argument("interval must be two numbers \"a,b\"");
  return Interval(v[0], v[1]);
}

bool complete_L2(const GammaSet& gamma, const Interval& iv) {
  return iv.length() <= static_cast<long>(gamma.size());
}

bool complete_C_symmetric(const GammaSet& gamma, const Rational& half_length) {
  if (!gamma.contains_zero()) throw std::invalid_argument("completeness in C([-a, a]) needs 0 in Gamma");
  if (half_length <= 0) throw std::invalid_argument("half-length must be positive");
  return half_length < r_gamma(gamma);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::frame:
      return "frame";
    case Verdict::no_frame:
      return "no_frame";
    default:
      return "inconclusive";
  }
}

double default_grid_step() { return std::ldexp(1.0, -12); }

namespace {

const Polynomial& cached_rank_drop(const GammaSet& gamma, std::size_t k) {
  static std::mutex mutex;
  static std::map<std::pair<std::vector<unsigned>, std::size_t>, Polynomial> cache;
  const std::lock_guard lock(mutex);
  const auto key = std::make_pair(std::vector<unsigned>(gamma.begin(), gamma.end()), k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, rank_drop_polynomial(gamma, k)).first;
  return it->second;
}

SingularExtremes sigma_at(const GammaSet& gamma, std::size_t k, double t) {
  std::vector<double> nodes(k);
  for (std::size_t j = 0; j < k; ++j) nodes[j] = t + static_cast<double>(j);
  return singular_extremes(nodes, gamma, k);
}

std::vector<SigmaSample> scan(const GammaSet& gamma, std::size_t k, const std::vector<double>& ts) {
  std::vector<SigmaSample> out(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) {
    const auto s = sigma_at(gamma, k, ts[i]);
    out[i] = {ts[i], s.sigma_min, s.sigma_max};
  });
  return out;
}

std::size_t argmin(const std::vector<SigmaSample>& samples) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].sigma_min < samples[best].sigma_min) best = i;
  }
  return best;
}

}  // namespace

std::vector<Regime> frame_regimes(const GammaSet& gamma, const Interval& iv) {
  const Rational len = iv.length();
  if (len > static_cast<long>(gamma.size())) throw std::invalid_argument("interval longer than #Gamma");
  Integer k_int;
  mpz_cdiv_q(k_int.get_mpz_t(), len.get_num_mpz_t(), len.get_den_mpz_t());
  const auto k = static_cast<std::size_t>(k_int.get_ui());
  const Rational delta = len - Rational(k_int - 1);
  if (delta == 1) return {{k, iv.a, iv.a + 1}};
  std::vector<Regime> regimes{{k, iv.a, iv.a + delta}};
  if (k > 1) regimes.push_back({k - 1, iv.a + delta, iv.a + 1});
  return regimes;
}

FrameEstimate frame_bounds(const GammaSet& gamma, const Interval& iv, double grid_step) {
  if (!(grid_step > 0.0)) throw std::invalid_argument("grid step must be positive");
  FrameEstimate est;
  est.grid_step = grid_step;
  if (!complete_L2(gamma, iv)) {
    est.verdict = Verdict::no_frame;
    est.exceeds_length = true;
    return est;
  }
  est.regimes = frame_regimes(gamma, iv);

  double best_min = std::numeric_limits<double>::infinity();
  double best_max = 0.0;
  for (const auto& regime : est.regimes) {
    const double lo = to_double(regime.lo);
    const double hi = to_double(regime.hi);
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil((hi - lo) / grid_step)));
    std::vector<double> ts(n + 1);
    for (std::size_t i = 0; i <= n; ++i) ts[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    const auto coarse = scan(gamma, regime.k, ts);
    est.profile.insert(est.profile.end(), coarse.begin(), coarse.end());
    for (const auto& s : coarse) best_max = std::max(best_max, s.sigma_max);

    SigmaSample local = coarse[argmin(coarse)];
    double h = (hi - lo) / static_cast<double>(n);
    for (int round = 0; round < 2; ++round) {
      std::vector<double> fine;
      for (int m = -3; m <= 3; ++m) {
        const double t = local.t + h * m / 3.0;
        if (t >= lo && t <= hi) fine.push_back(t);
      }
      const auto refined = scan(gamma, regime.k, fine);
      const auto& candidate = refined[argmin(refined)];
      if (candidate.sigma_min < local.sigma_min) local = candidate;
      h /= 3.0;
    }

    if (gamma.size() <= kDefaultDetInSCap) {
      const auto& p = cached_rank_drop(gamma, regime.k);
      if (p.degree() > 0) {
        for (const auto& root : isolate_real_roots(p, regime.lo, regime.hi, default_root_width())) {
          est.certificates.push_back({regime.k, p, root});
          const double t = to_double(root.midpoint());
          const auto s = sigma_at(gamma, regime.k, t);
          if (s.sigma_min < local.sigma_min) local = {t, s.sigma_min, s.sigma_max};
        }
      }
    }
    if (local.sigma_min < best_min) {
      best_min = local.sigma_min;
      est.min_location = local.t;
    }
  }
  std::sort(est.profile.begin(), est.profile.end(), [](const auto& x, const auto& y) { return x.t < y.t; });

  est.lower = best_min * best_min;
  est.upper = best_max * best_max;
  if (!est.certificates.empty()) {
    est.verdict = Verdict::no_frame;
  } else if (est.lower >= kFailureThreshold * est.upper) {
    est.verdict = Verdict::frame;
  } else {
    est.verdict = Verdict::inconclusive;
  }
  return est;
}

double frame_radius_scan(const GammaSet& gamma, double resolution, double grid_step) {
  if (!gamma.contains_zero()) throw std::invalid_argument("frame radius scan needs 0 in Gamma");
  if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
  // (-lo, lo) is a frame for tiny lo; (-hi, hi) is longer than #Gamma
  Rational lo = 0;
  Rational hi = ratio(gamma.size() + 1, 2);
  const Rational res = from_double(resolution);
  while (hi - lo > res) {
    const Rational mid = (lo + hi) / 2;
    if (frame_bounds(gamma, Interval(-mid, mid), grid_step).verdict == Verdict::frame) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return to_double((lo + hi) / 2);
}

Rational cr_scan(const GammaSet& gamma) { return ratio(gamma.size(), 2); }

namespace {

// V(t) with entry (i, j) = (t+j)^{gamma_i}, j < N.
Eigen::MatrixXd shifted_vandermonde(const GammaSet& gamma, double t) {
  const auto n = static_cast<Eigen::Index>(gamma.size());
  Eigen::MatrixXd v(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) v(i, j) = std::pow(t + static_cast<double>(j), gamma[i]);
  }
  return v;
}

// (F_0, ..., F_{N-1}, F_N) at t inside I, with F_N = 1.
std::vector<double> components_at(const GammaSet& gamma, double t) {
  const auto n = static_cast<Eigen::Index>(gamma.size());
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) rhs(i) = -std::pow(t + static_cast<double>(n), gamma[i]);
  const Eigen::VectorXd f = shifted_vandermonde(gamma, t).fullPivLu().solve(rhs);
  std::vector<double> out(f.data(), f.data() + n);
  out.push_back(1.0);
  return out;
}

}  // namespace

PiecewiseWitness noncompleteness_witness(const GammaSet& gamma, const Interval& iv, double grid) {
  const auto n = static_cast<long>(gamma.size());
  if (iv.length() <= n) throw std::invalid_argument("witness needs b - a > #Gamma");
  if (!(grid > 0.0)) throw std::invalid_argument("grid must be positive");
  const Rational excess = iv.length() - n;
  const Rational delta = excess < 1 ? excess : Rational(1);
  const double a = to_double(iv.a);
  const double d = to_double(delta);

  // a power of two number of cells, so dyadic endpoints are grid points
  std::size_t cells = 16;
  while (d / static_cast<double>(cells) > grid) cells *= 2;
  std::vector<double> abs_det(cells + 1);
  parallel_for(cells + 1, [&](std::size_t i) {
    abs_det[i] = std::abs(shifted_vandermonde(gamma, a + d * static_cast<double>(i) / static_cast<double>(cells))
                              .fullPivLu()
                              .determinant());
  });
  const double max_det = *std::max_element(abs_det.begin(), abs_det.end());
  if (max_det == 0.0) throw std::runtime_error("det V vanishes on every grid point of (a, a + delta)");

  // largest dyadic piece with |det| >= max/2 at every grid point it contains;
  // pieces keep at least 4 cells
  std::size_t first = 0;
  std::size_t last = 0;
  double piece_min = 0.0;
  for (std::size_t width = cells; width >= 4 && last == 0; width /= 2) {
    for (std::size_t start = 0; start + width <= cells; start += width) {
      const double m = *std::min_element(abs_det.begin() + static_cast<long>(start),
                                         abs_det.begin() + static_cast<long>(start + width) + 1);
      if (m >= 0.5 * max_det && m > piece_min) {
        first = start;
        last = start + width;
        piece_min = m;
      }
    }
  }
  if (last == 0) throw std::runtime_error("grid too coarse to certify the witness interval");

  PiecewiseWitness w{gamma, Interval(iv.a, iv.a + 1), {}, {}, {}, 0.0, 0.0, 0.0, piece_min, max_det};
  const double lo = a + d * static_cast<double>(first) / static_cast<double>(cells);
  const double hi = a + d * static_cast<double>(last) / static_cast<double>(cells);
  w.piece = {lo, hi};
  w.components.assign(gamma.size() + 1, {});
  for (std::size_t i = first; i <= last; ++i) {
    const double t = a + d * static_cast<double>(i) / static_cast<double>(cells);
    w.samples.push_back(t);
    const auto f = components_at(gamma, t);
    for (std::size_t j = 0; j < f.size(); ++j) w.components[j].push_back(f[j]);
  }

  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(4.0 * (hi - lo))));
  std::vector<double> norm_terms;
  for_each_quadrature_node(lo, hi, panels, 16, [&](double t, double weight) {
    for (double f : components_at(gamma, t)) norm_terms.push_back(weight * f * f);
  });
  w.norm_squared = pairwise_sum(norm_terms);
  w.last_norm_squared = hi - lo;
  w.max_pairing = witness_pairing_residual(w, gamma);
  return w;
}

double witness_pairing_residual(const PiecewiseWitness& w, const GammaSet& test, int n_range) {
  const auto [lo, hi] = w.piece;
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(4.0 * (hi - lo))));
  std::vector<double> ts;
  std::vector<double> weights;
  for_each_quadrature_node(lo, hi, panels, 16, [&](double t, double weight) {
    ts.push_back(t);
    weights.push_back(weight);
  });
  std::vector<std::vector<double>> f(ts.size());
  for (std::size_t q = 0; q < ts.size(); ++q) f[q] = components_at(w.gamma, ts[q]);

  double worst = 0.0;
  for (unsigned g : test) {
    for (int n = -n_range; n <= n_range; ++n) {
      // <F, s^g e^{2 pi i n s}> = sum_j int_{I+j} F(s) s^g e^{-2 pi i n s} ds; on I + j, s = t + j
      std::complex<double> total = 0.0;
      for (std::size_t j = 0; j < f.front().size(); ++j) {
        std::complex<double> piece = 0.0;
        for (std::size_t q = 0; q < ts.size(); ++q) {
          const double s = ts[q] + static_cast<double>(j);
          piece += weights[q] * f[q][j] * std::pow(s, g) * std::polar(1.0, -2.0 * std::numbers::pi * n * s);
        }
        total += piece;
      }
      worst = std::max(worst, std::abs(total));
    }
  }
  return worst;
}

}  // namespace lacunaria
