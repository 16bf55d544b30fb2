#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace lacunaria {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t n);

/// Composite Gauss-Legendre on [a, b]: `panels` equal panels with
/// `nodes_per_panel` nodes each. Calls f(x, w) for every node x with weight w.
void for_each_quadrature_node(double a, double b, std::size_t panels, std::size_t nodes_per_panel,
                              const std::function<void(double, double)>& f);

double integrate(double a, double b, std::size_t panels, std::size_t nodes_per_panel,
                 const std::function<double(double)>& f);

/// Pairwise (cascade) summation; the order of addition depends only on the size.
double pairwise_sum(const std::vector<double>& values);

}  // namespace lacunaria
