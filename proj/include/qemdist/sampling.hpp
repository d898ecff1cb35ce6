// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qemdist/distribution.hpp"
#include "qemdist/rng.hpp"

namespace qem {

/// Measurement counts over bitstrings.
struct Counts {
  int n_bits = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t total = 0;
};

/// Inverse-CDF sampler over a weighted outcome map.
class CumulativeSampler {
 public:
  explicit CumulativeSampler(const std::map<std::uint64_t, double>& weights);

  std::uint64_t draw(Rng& rng) const;
  bool empty() const { return keys_.empty(); }

 private:
  std::vector<std::uint64_t> keys_;
  std::vector<double> cumulative_;
};

/// Multinomial draw of n_shots outcomes; deterministic given seed.
Counts sample_counts(const Distribution& dist, std::uint64_t n_shots,
                     std::uint64_t seed);

/// count/total, renormalized so the entries sum to one.
/// Throws std::invalid_argument on zero total shots.
Distribution empirical_distribution(const Counts& counts);

}  // namespace qem
