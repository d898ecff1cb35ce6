// SPDX-License-Identifier: Apache-2.0

#include "qemdist/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace qem {

std::string format_bitstring(std::uint64_t z, int n_bits) {
  std::string s(n_bits, '0');
  for (int i = 0; i < n_bits; ++i)
    if (z & (std::uint64_t(1) << (n_bits - 1 - i))) s[i] = '1';
  return s;
}

std::uint64_t parse_bitstring(const std::string& s, int n_bits) {
  if (static_cast<int>(s.size()) != n_bits)
    throw std::invalid_argument("bitstring '" + s + "' does not have " +
                                std::to_string(n_bits) + " bits");
  std::uint64_t z = 0;
  for (int i = 0; i < n_bits; ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw std::invalid_argument("bitstring '" + s + "' has a non-binary digit");
    if (s[i] == '1') z |= std::uint64_t(1) << (n_bits - 1 - i);
  }
  return z;
}

Distribution::Distribution(int n_bits, std::map<std::uint64_t, double> probs)
    : n_bits_(n_bits) {
  if (n_bits <= 0) throw std::invalid_argument("n_bits must be positive");
  const std::uint64_t space = std::uint64_t(1) << n_bits;
  double sum = 0.0;
  for (const auto& [z, p] : probs) {
    if (z >= space) throw std::invalid_argument("outcome index exceeds 2^n_bits");
    if (!std::isfinite(p) || p < -1e-12 || p > 1.0 + 1e-12)
      throw std::invalid_argument("probability out of [0, 1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) +
                                ", not 1");
  probs_ = std::move(probs);
}

Distribution Distribution::from_dense(int n_bits, std::span<const double> probs) {
  std::map<std::uint64_t, double> m;
  for (std::size_t z = 0; z < probs.size(); ++z)
    if (probs[z] != 0.0) m[z] = probs[z];
  return Distribution(n_bits, std::move(m));
}

Distribution Distribution::point_mass(int n_bits, std::uint64_t z) {
  return Distribution(n_bits, {{z, 1.0}});
}

double Distribution::at(std::uint64_t z) const {
  auto it = probs_.find(z);
  return it == probs_.end() ? 0.0 : it->second;
}

}  // namespace qem
