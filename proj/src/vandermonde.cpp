#include "lacunaria/vandermonde.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace lacunaria {

Rational default_root_width() {
  Rational w(1);
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 40);
  return w;
}

GeneralizedVandermonde::GeneralizedVandermonde(std::vector<Rational> nodes, GammaSet exponents)
    : nodes_(std::move(nodes)), exponents_(std::move(exponents)) {
  if (nodes_.size() != exponents_.size()) {
    throw std::invalid_argument("generalized Vandermonde matrix must be square: " + std::to_string(nodes_.size()) +
                                " nodes vs " + std::to_string(exponents_.size()) + " exponents");
  }
}

RationalMatrix GeneralizedVandermonde::matrix() const {
  RationalMatrix out(size(), RationalVector(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) out[i][j] = entry(i, j);
  }
  return out;
}

Rational det_exact(const GeneralizedVandermonde& m) {
  const std::size_t n = m.size();
  const unsigned top = m.exponents().max();
  // Column j times q_j^top has integer entries p_j^γ q_j^(top-γ).
  IntegerMatrix scaled(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const Integer& p = m.nodes()[j].get_num();
    const Integer& q = m.nodes()[j].get_den();
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned g = m.exponents()[i];
      Integer num, den;
      mpz_pow_ui(num.get_mpz_t(), p.get_mpz_t(), g);
      mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), top - g);
      scaled[i][j] = num * den;
    }
    Integer q_top;
    mpz_pow_ui(q_top.get_mpz_t(), q.get_mpz_t(), top);
    scale *= q_top;
  }
  Rational det(bareiss_determinant(std::move(scaled)), scale);
  det.canonicalize();
  return det;
}

bool is_invertible(const GeneralizedVandermonde& m) { return det_exact(m) != 0; }

std::optional<RationalVector> null_vector(const GeneralizedVandermonde& m) {
  // rows of V^T are nodes, columns are exponents
  const std::size_t n = m.size();
  RationalMatrix transposed(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) transposed[j][i] = m.entry(i, j);
  }
  auto basis = null_space(transposed);
  if (basis.empty()) return std::nullopt;
  return primitive_integer_vector(std::move(basis.front()), SignConvention::last_positive);
}

LacunaryPolynomial witness_polynomial(const GammaSet& exponents, const RationalVector& a) {
  return LacunaryPolynomial(exponents, a);
}

std::size_t minor_count(std::size_t n, std::size_t max_order) {
  std::size_t total = 0;
  for (std::size_t k = 1; k <= std::min(n, max_order); ++k) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    total += c * c;
  }
  return total;
}

namespace {

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : subsets_of_size(static_cast<unsigned>(n - 1), k)) {
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

}  // namespace

bool verify_total_positivity(const GeneralizedVandermonde& m, std::size_t max_order) {
  const auto& nodes = m.nodes();
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (nodes[j] <= 0 || (j > 0 && nodes[j] <= nodes[j - 1])) {
      throw std::invalid_argument("total positivity hypothesis violated: nodes must be positive and increasing");
    }
  }
  if (max_order == 0 || max_order > m.size()) {
    throw std::invalid_argument("minor order must lie in 1..N");
  }
  for (std::size_t k = 1; k <= max_order; ++k) {
    const auto subsets = index_subsets(m.size(), k);
    for (const auto& rows : subsets) {
      std::vector<unsigned> exps;
      for (auto r : rows) exps.push_back(m.exponents()[r]);
      const GammaSet sub_exponents(std::move(exps));
      for (const auto& cols : subsets) {
        std::vector<Rational> sub_nodes;
        for (auto c : cols) sub_nodes.push_back(nodes[c]);
        // a minor of V is itself a generalized Vandermonde determinant
        if (det_exact(GeneralizedVandermonde(std::move(sub_nodes), sub_exponents)) <= 0) return false;
      }
    }
  }
  return true;
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Laplace expansion along columns, memoised on the set of rows still in play.
class PolyDeterminant {
 public:
  PolyDeterminant(const PolyMatrix& m, std::vector<std::size_t> rows) : m_(m), rows_(std::move(rows)) {}

  Polynomial compute() { return expand((std::uint32_t{1} << rows_.size()) - 1, 0); }

 private:
  Polynomial expand(std::uint32_t mask, std::size_t col) {
    if (mask == 0) return Polynomial::constant(Rational(1));
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Polynomial sum;
    int sign = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!(mask & (std::uint32_t{1} << r))) continue;
      const Polynomial& entry = m_[rows_[r]][col];
      if (!entry.is_zero()) {
        Polynomial term = entry * expand(mask & ~(std::uint32_t{1} << r), col + 1);
        sum = sign > 0 ? sum + term : sum - term;
      }
      sign = -sign;
    }
    memo_.emplace(mask, sum);
    return sum;
  }

  const PolyMatrix& m_;
  std::vector<std::size_t> rows_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

PolyMatrix shifted_power_matrix(const GammaSet& gamma, std::size_t k) {
  PolyMatrix m(gamma.size(), std::vector<Polynomial>(k));
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      m[i][j] = Polynomial::shifted_power(Rational(static_cast<long>(j)), gamma[i]);
    }
  }
  return m;
}

}  // namespace

DetPolynomial det_in_s(const GammaSet& gamma, std::size_t cap) {
  if (gamma.size() > cap) {
    throw std::invalid_argument("det_in_s: #Γ = " + std::to_string(gamma.size()) + " exceeds cap " + std::to_string(cap));
  }
  const auto m = shifted_power_matrix(gamma, gamma.size());
  std::vector<std::size_t> rows(gamma.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return {gamma, PolyDeterminant(m, rows).compute()};
}

Polynomial rank_drop_polynomial(const GammaSet& gamma, std::size_t k, std::size_t cap) {
  if (k == 0 || k > gamma.size()) throw std::invalid_argument("rank_drop_polynomial: k must lie in 1..#Γ");
  if (gamma.size() > cap) {
    throw std::invalid_argument("rank_drop_polynomial: #Γ = " + std::to_string(gamma.size()) + " exceeds cap " +
                                std::to_string(cap));
  }
  const auto m = shifted_power_matrix(gamma, k);
  Polynomial g;
  for (const auto& s : subsets_of_size(static_cast<unsigned>(gamma.size() - 1), k)) {
    std::vector<std::size_t> rows(s.begin(), s.end());
    g = gcd(g, PolyDeterminant(m, rows).compute());
    if (g.degree() == 0) break;
  }
  return g;
}

std::vector<RootInterval> exceptional_set(const GammaSet& gamma, const Rational& lo, const Rational& hi,
                                          const Rational& width, std::size_t cap) {
  const auto q = det_in_s(gamma, cap);
  auto roots = isolate_real_roots(q.poly, lo, hi, width);
  std::erase_if(roots, [&](const RootInterval& r) { return r.exact && (r.lo == lo || r.lo == hi); });
  return roots;
}

SingularExtremes singular_extremes(std::span<const double> nodes, const GammaSet& gamma, std::size_t k) {
  if (k == 0 || k > gamma.size()) throw std::invalid_argument("singular_extremes: k must lie in 1..#Γ");
  if (nodes.size() != k) throw std::invalid_argument("singular_extremes: expected k nodes");
  Eigen::MatrixXd m(gamma.size(), k);
  double scale = 0.0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      m(i, j) = std::pow(nodes[j], static_cast<double>(gamma[i]));
      scale = std::max(scale, std::abs(m(i, j)));
    }
  }
  if (scale == 0.0) return {0.0, 0.0};
  m /= scale;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  return {sv(sv.size() - 1) * scale, sv(0) * scale};
}

}  // namespace lacunaria
