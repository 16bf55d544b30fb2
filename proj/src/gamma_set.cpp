#include "lacunaria/gamma_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace lacunaria {

GammaSet::GammaSet(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw std::invalid_argument("exponent set must be nonempty");
  for (std::size_t i = 1; i < exponents_.size(); ++i) {
    if (exponents_[i] <= exponents_[i - 1]) {
      throw std::invalid_argument("exponent set must be strictly increasing: " + to_string());
    }
  }
}

GammaSet GammaSet::parse(std::string_view text) {
  std::vector<unsigned> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string item(text.substr(start, comma - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("invalid exponent '" + item + "' in '" + std::string(text) + "'");
    }
    unsigned long value = std::stoul(item);
    if (value > 4096) throw std::invalid_argument("exponent too large: " + item);
    values.push_back(static_cast<unsigned>(value));
    start = comma + 1;
  }
  return GammaSet(std::move(values));
}

bool GammaSet::contains(unsigned exponent) const {
  return std::binary_search(exponents_.begin(), exponents_.end(), exponent);
}

std::string GammaSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exponents_[i]);
  }
  return out;
}

ParitySplit parity_split(const GammaSet& gamma) {
  ParitySplit split;
  for (unsigned g : gamma) (g % 2 == 0 ? split.even : split.odd).push_back(g);
  return split;
}

Rational r_gamma(const GammaSet& gamma) {
  const auto split = parity_split(gamma);
  const auto n_even = static_cast<long>(split.even.size());
  const auto n_odd = static_cast<long>(split.odd.size());
  if (n_odd < n_even) return ratio(2 * n_odd + 1, 2);
  return Rational(n_even);
}

std::vector<GammaSet> subsets_of_size(unsigned cap, std::size_t k) {
  std::vector<GammaSet> out;
  if (k == 0 || k > static_cast<std::size_t>(cap) + 1) return out;
  std::vector<unsigned> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = static_cast<unsigned>(i);
  while (true) {
    out.emplace_back(current);
    // advance to the next combination
    std::size_t i = k;
    while (i > 0 && current[i - 1] == cap - (k - i)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace lacunaria
