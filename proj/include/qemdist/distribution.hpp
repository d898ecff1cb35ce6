// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace qem {

/// Renders z as a bitstring, qubit 0 first (it owns the most significant bit).
std::string format_bitstring(std::uint64_t z, int n_bits);

/// Inverse of format_bitstring. Throws std::invalid_argument on bad input.
std::uint64_t parse_bitstring(const std::string& s, int n_bits);

/// Normalized measurement distribution. Absent keys mean probability zero;
/// explicit zero entries are allowed (they matter for per-bin bookkeeping).
class Distribution {
 public:
  Distribution() = default;

  /// Validates each p in [0,1] and sum(p) = 1 within 1e-9.
  Distribution(int n_bits, std::map<std::uint64_t, double> probs);

  /// Builds from a dense vector, dropping exact zeros.
  static Distribution from_dense(int n_bits, std::span<const double> probs);

  static Distribution point_mass(int n_bits, std::uint64_t z);

  int n_bits() const { return n_bits_; }
  const std::map<std::uint64_t, double>& probs() const { return probs_; }
  double at(std::uint64_t z) const;

 private:
  int n_bits_ = 0;
  std::map<std::uint64_t, double> probs_;
};

/// Bitstring-indexed real vector produced by mitigation; entries may be
/// negative or exceed 1. Values must be finite.
struct QuasiDistribution {
  int n_bits = 0;
  std::map<std::uint64_t, double> values;

  double at(std::uint64_t z) const {
    auto it = values.find(z);
    return it == values.end() ? 0.0 : it->second;
  }
};

}  // namespace qem
