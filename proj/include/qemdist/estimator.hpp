// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "qemdist/circuit.hpp"
#include "qemdist/distribution.hpp"
#include "qemdist/folding.hpp"
#include "qemdist/noise.hpp"

namespace qem {

enum class Amplification { fold, rate_scale };

/// A noisy preparation described by circuit + noise + scale factor,
/// simulated on demand when the term is resolved.
struct NoisyPrep {
  Circuit circuit;
  NoiseModel noise;
  int scale = 1;
  Amplification amplification = Amplification::fold;
};

struct AnsatzTerm {
  double coefficient = 0.0;
  std::variant<Distribution, NoisyPrep> source;
};

/// Real-linear combination sum_k c_k rho_k over noisy preparations.
struct LinearAnsatz {
  std::vector<AnsatzTerm> terms;

  /// Gamma = sum |c_k|. Throws std::invalid_argument when the ansatz is
  /// empty, a coefficient is non-finite, or Gamma is zero.
  double gamma() const;
};

/// Simulates (or passes through) the term's distribution.
Distribution resolve_source(const AnsatzTerm& term);
std::vector<Distribution> resolve_sources(const LinearAnsatz& ansatz);

struct McResult {
  QuasiDistribution quasi;
  double gamma = 0.0;
};

/// Monte-Carlo estimator: each round draws term k with probability
/// |c_k|/Gamma, samples one outcome from it, and accumulates sgn(c_k).
/// The returned values are Gamma * mean accumulator, an unbiased estimate
/// of sum_k c_k p_z^(k).
McResult mc_estimate(const LinearAnsatz& ansatz, std::uint64_t n_meas,
                     std::uint64_t seed);

struct ShotPlan {
  std::vector<std::uint64_t> allocations;

  std::uint64_t total() const;
};

/// Samples allocations[k] shots from each term and returns
/// sum_k c_k * empirical_k.
QuasiDistribution direct_estimate(const LinearAnsatz& ansatz, const ShotPlan& plan,
                                  std::uint64_t seed);

/// Infinite-shot limit: sum_k c_k p_z^(k) with the exact distributions.
QuasiDistribution combine_exact(const LinearAnsatz& ansatz);

struct DirectVariance {
  std::map<std::uint64_t, double> per_bin;
  double total = 0.0;
  double bound = 0.0;  // sum_k c_k^2 / N^(k), always >= total
};

/// Var[p_z] = sum_k c_k^2 (p_z^(k) - p_z^(k)^2) / N^(k) per bin, its total
/// over bins, and the closed-form bound.
DirectVariance variance_direct(const LinearAnsatz& ansatz, const ShotPlan& plan,
                               std::span<const Distribution> dists);

/// N^(k) proportional to |c_k| with largest-remainder rounding (ties broken
/// by term index). Throws when some term would receive zero shots.
ShotPlan optimal_shot_allocation(const LinearAnsatz& ansatz, std::uint64_t n_total);

}  // namespace qem
