// SPDX-License-Identifier: Apache-2.0

#include "qemdist/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace qem {

CumulativeSampler::CumulativeSampler(const std::map<std::uint64_t, double>& weights) {
  keys_.reserve(weights.size());
  cumulative_.reserve(weights.size());
  double running = 0.0;
  for (const auto& [z, w] : weights) {
    if (w < 0.0) throw std::invalid_argument("sampler weights must be non-negative");
    if (w == 0.0) continue;
    running += w;
    keys_.push_back(z);
    cumulative_.push_back(running);
  }
  if (keys_.empty()) throw std::invalid_argument("sampler needs positive weight");
}

std::uint64_t CumulativeSampler::draw(Rng& rng) const {
  const double target = rng.uniform01() * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  const std::size_t idx =
      it == cumulative_.end() ? keys_.size() - 1 : std::size_t(it - cumulative_.begin());
  return keys_[idx];
}

Counts sample_counts(const Distribution& dist, std::uint64_t n_shots,
                     std::uint64_t seed) {
  Counts out;
  out.n_bits = dist.n_bits();
  out.total = n_shots;
  if (n_shots == 0) return out;
  CumulativeSampler sampler(dist.probs());
  Rng rng(seed);
  for (std::uint64_t s = 0; s < n_shots; ++s) ++out.counts[sampler.draw(rng)];
  return out;
}

Distribution empirical_distribution(const Counts& counts) {
  if (counts.total == 0)
    throw std::invalid_argument("empirical distribution needs at least one shot");
  std::map<std::uint64_t, double> probs;
  double sum = 0.0;
  for (const auto& [z, c] : counts.counts) {
    const double p = double(c) / double(counts.total);
    probs[z] = p;
    sum += p;
  }
  for (auto& [z, p] : probs) p /= sum;
  return Distribution(counts.n_bits, std::move(probs));
}

}  // namespace qem
