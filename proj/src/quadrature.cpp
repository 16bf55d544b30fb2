#include "lacunaria/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lacunaria {

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = pk;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

void for_each_quadrature_node(double a, double b, std::size_t panels, std::size_t nodes_per_panel,
                              const std::function<void(double, double)>& f) {
  if (panels == 0) throw std::invalid_argument("at least one quadrature panel is required");
  const auto rule = gauss_legendre(nodes_per_panel);
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    const double mid = lo + 0.5 * h;
    for (std::size_t i = 0; i < nodes_per_panel; ++i) f(mid + 0.5 * h * rule.nodes[i], 0.5 * h * rule.weights[i]);
  }
}

double integrate(double a, double b, std::size_t panels, std::size_t nodes_per_panel,
                 const std::function<double(double)>& f) {
  std::vector<double> terms;
  terms.reserve(panels * nodes_per_panel);
  for_each_quadrature_node(a, b, panels, nodes_per_panel, [&](double x, double w) { terms.push_back(w * f(x)); });
  return pairwise_sum(terms);
}

namespace {

double pairwise(const double* data, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise(data, half) + pairwise(data + half, n - half);
}

}  // namespace

double pairwise_sum(const std::vector<double>& values) { return pairwise(values.data(), values.size()); }

}  // namespace lacunaria
