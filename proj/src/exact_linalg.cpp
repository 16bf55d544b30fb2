#include "lacunaria/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace lacunaria {

Integer bareiss_determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  Integer previous_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // exact division: the quotient is a (k+1)-order minor of the input
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
      }
      m[i][k] = 0;
    }
    previous_pivot = m[k][k];
  }
  Integer det = m[n - 1][n - 1];
  return sign > 0 ? det : Integer(-det);
}

Rational determinant(const RationalMatrix& m) {
  IntegerMatrix scaled;
  scaled.reserve(m.size());
  Integer scale = 1;
  for (const auto& row : m) {
    Integer row_lcm = 1;
    for (const auto& x : row) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> int_row;
    int_row.reserve(row.size());
    for (const auto& x : row) int_row.push_back(Integer(x.get_num() * (row_lcm / x.get_den())));
    scaled.push_back(std::move(int_row));
    scale *= row_lcm;
  }
  Rational det(bareiss_determinant(std::move(scaled)), scale);
  det.canonicalize();
  return det;
}

namespace {

// In-place reduced row echelon form; returns pivot column of each pivot row.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<RationalVector> null_space(const RationalMatrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m.front().size();
  RationalMatrix work = m;
  const auto pivots = rref(work, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw std::invalid_argument("right-hand side size mismatch");
  RationalMatrix augmented = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (augmented[i].size() != n) throw std::invalid_argument("solve requires a square matrix");
    augmented[i].push_back(rhs[i]);
  }
  const auto pivots = rref(augmented, n);
  if (pivots.size() < n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = augmented[i][n];
  return x;
}

RationalVector primitive_integer_vector(RationalVector v, SignConvention convention) {
  Integer den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& x : v) {
    Integer scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return v;
  int sign = 0;
  if (convention == SignConvention::first_positive) {
    for (const auto& x : v) {
      if (x != 0) { sign = sgn(x); break; }
    }
  } else {
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      if (*it != 0) { sign = sgn(*it); break; }
    }
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sign < 0) factor = -factor;
  for (auto& x : v) x *= factor;
  return v;
}

}  // namespace lacunaria
