#include "lacunaria/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lacunaria {

namespace {

int sign(const Rational& x) { return sgn(x); }

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::shifted_power(const Rational& shift, unsigned n) {
  std::vector<Rational> coeffs(n + 1);
  Integer binom = 1;
  for (unsigned k = 0; k <= n; ++k) {
    // coefficient of x^k in (x + shift)^n is C(n,k) shift^(n-k)
    coeffs[k] = Rational(binom) * power(shift, n - k);
    binom = binom * (n - k) / (k + 1);
  }
  return Polynomial(std::move(coeffs));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return Rational(1 / leading()) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c == 0) return {};
  Polynomial out = p;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

std::string Polynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    }
    out += lacunaria::to_string(c);
    if (i > 0) out += std::string("*") + variable + "^" + std::to_string(i);
  }
  return out;
}

DivisionResult divide(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = numerator.coefficients();
  const auto& den = denominator.coefficients();
  const std::size_t dd = den.size() - 1;
  if (rem.size() < den.size()) return {Polynomial{}, numerator};
  std::vector<Rational> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    Rational q = rem[k] / den[dd];
    quot[k - dd] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * den[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  Polynomial g = gcd(p, p.derivative());
  return divide(p, g).quotient;
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  Polynomial base = square_free_part(p);
  chain_.push_back(base);
  if (base.degree() <= 0) return;
  chain_.push_back(base.derivative());
  while (true) {
    Polynomial r = divide(chain_[chain_.size() - 2], chain_.back()).remainder;
    if (r.is_zero()) break;
    // positive rescaling keeps signs and tames coefficient growth
    Rational scale = abs(r.leading());
    chain_.push_back(Rational(-1 / scale) * r);
  }
}

namespace {

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

std::size_t SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign(q(x)));
  return count_variations(signs);
}

std::size_t SturmSequence::variations_at_positive_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sign(q.leading()));
  return count_variations(signs);
}

std::size_t SturmSequence::variations_at_negative_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) {
    int s = sign(q.leading());
    signs.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

std::size_t SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return variations_at(lo) - variations_at(hi);
}

std::size_t SturmSequence::count_positive_roots() const {
  return variations_at(Rational(0)) - variations_at_positive_infinity();
}

std::size_t SturmSequence::count_real_roots() const {
  return variations_at_negative_infinity() - variations_at_positive_infinity();
}

Rational cauchy_root_bound(const Polynomial& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational bound = 0;
  for (long i = 0; i < p.degree(); ++i) bound = std::max(bound, Rational(abs(p.coefficients()[i] / p.leading())));
  return bound + 1;
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                             const Rational& width) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  if (width <= 0) throw std::invalid_argument("isolation width must be positive");
  std::vector<RootInterval> roots;
  if (hi < lo) return roots;
  const Polynomial base = square_free_part(p);
  if (base(lo) == 0) roots.push_back({lo, lo, true});
  if (hi == lo) return roots;
  const SturmSequence sturm(base);

  struct Pending {
    Rational a, b;
    std::size_t count;
  };
  // depth-first, left child first, so output stays sorted
  std::vector<Pending> stack{{lo, hi, sturm.count_roots(lo, hi)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      if (base(cur.b) == 0) {
        roots.push_back({cur.b, cur.b, true});
        continue;
      }
      if (cur.b - cur.a < width) {
        roots.push_back({cur.a, cur.b, false});
        continue;
      }
    }
    Rational mid = (cur.a + cur.b) / 2;
    std::size_t left = sturm.count_roots(cur.a, mid);
    stack.push_back({mid, cur.b, cur.count - left});
    stack.push_back({cur.a, mid, left});
  }
  return roots;
}

}  // namespace lacunaria
