// SPDX-License-Identifier: Apache-2.0

#include "qemdist/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qemdist/sampling.hpp"
#include "qemdist/simulator.hpp"

namespace qem {

double LinearAnsatz::gamma() const {
  if (terms.empty()) throw std::invalid_argument("ansatz needs at least one term");
  double g = 0.0;
  for (const auto& t : terms) {
    if (!std::isfinite(t.coefficient))
      throw std::invalid_argument("ansatz coefficient must be finite");
    g += std::abs(t.coefficient);
  }
  if (g <= 0.0) throw std::invalid_argument("Gamma must be positive");
  return g;
}

Distribution resolve_source(const AnsatzTerm& term) {
  if (const auto* dist = std::get_if<Distribution>(&term.source)) return *dist;
  const auto& prep = std::get<NoisyPrep>(term.source);
  if (prep.amplification == Amplification::fold) {
    const Circuit folded = fold_circuit(prep.circuit, ScaleFactor(prep.scale));
    return output_distribution(simulate(folded, prep.noise), prep.noise.readout_flip);
  }
  const NoiseModel scaled = prep.noise.gates_scaled(double(prep.scale));
  return output_distribution(simulate(prep.circuit, scaled), scaled.readout_flip);
}

std::vector<Distribution> resolve_sources(const LinearAnsatz& ansatz) {
  std::vector<Distribution> dists;
  dists.reserve(ansatz.terms.size());
  for (const auto& t : ansatz.terms) dists.push_back(resolve_source(t));
  for (std::size_t k = 1; k < dists.size(); ++k)
    if (dists[k].n_bits() != dists[0].n_bits())
      throw std::invalid_argument("ansatz sources disagree on n_bits");
  return dists;
}

McResult mc_estimate(const LinearAnsatz& ansatz, std::uint64_t n_meas,
                     std::uint64_t seed) {
  if (n_meas == 0) throw std::invalid_argument("n_meas must be positive");
  const double gamma = ansatz.gamma();
  const auto dists = resolve_sources(ansatz);

  std::map<std::uint64_t, double> term_weights;
  for (std::size_t k = 0; k < ansatz.terms.size(); ++k)
    term_weights[k] = std::abs(ansatz.terms[k].coefficient) / gamma;
  CumulativeSampler term_sampler(term_weights);

  std::vector<CumulativeSampler> outcome_samplers;
  outcome_samplers.reserve(dists.size());
  for (const auto& d : dists) outcome_samplers.emplace_back(d.probs());

  Rng rng(seed);
  std::map<std::uint64_t, double> acc;
  for (std::uint64_t round = 0; round < n_meas; ++round) {
    const std::uint64_t k = term_sampler.draw(rng);
    const std::uint64_t z = outcome_samplers[k].draw(rng);
    acc[z] += ansatz.terms[k].coefficient >= 0.0 ? 1.0 : -1.0;
  }

  McResult out;
  out.gamma = gamma;
  out.quasi.n_bits = dists[0].n_bits();
  for (const auto& [z, sum] : acc)
    out.quasi.values[z] = gamma * sum / double(n_meas);
  return out;
}

std::uint64_t ShotPlan::total() const {
  return std::accumulate(allocations.begin(), allocations.end(), std::uint64_t(0));
}

QuasiDistribution direct_estimate(const LinearAnsatz& ansatz, const ShotPlan& plan,
                                  std::uint64_t seed) {
  if (plan.allocations.size() != ansatz.terms.size())
    throw std::invalid_argument("shot plan length must match ansatz terms");
  const auto dists = resolve_sources(ansatz);
  QuasiDistribution out;
  out.n_bits = dists[0].n_bits();
  for (std::size_t k = 0; k < dists.size(); ++k) {
    if (plan.allocations[k] == 0)
      throw std::invalid_argument("every term needs a positive shot count");
    const Counts counts =
        sample_counts(dists[k], plan.allocations[k], mix_seed(seed, k));
    const Distribution empirical = empirical_distribution(counts);
    for (const auto& [z, p] : empirical.probs())
      out.values[z] += ansatz.terms[k].coefficient * p;
  }
  return out;
}

QuasiDistribution combine_exact(const LinearAnsatz& ansatz) {
  const auto dists = resolve_sources(ansatz);
  QuasiDistribution out;
  out.n_bits = dists[0].n_bits();
  for (std::size_t k = 0; k < dists.size(); ++k)
    for (const auto& [z, p] : dists[k].probs())
      out.values[z] += ansatz.terms[k].coefficient * p;
  return out;
}

DirectVariance variance_direct(const LinearAnsatz& ansatz, const ShotPlan& plan,
                               std::span<const Distribution> dists) {
  if (plan.allocations.size() != ansatz.terms.size() ||
      dists.size() != ansatz.terms.size())
    throw std::invalid_argument("plan/distribution count must match ansatz terms");
  DirectVariance out;
  for (std::size_t k = 0; k < dists.size(); ++k) {
    const double c2 = ansatz.terms[k].coefficient * ansatz.terms[k].coefficient;
    const double n = double(plan.allocations[k]);
    if (plan.allocations[k] == 0)
      throw std::invalid_argument("every term needs a positive shot count");
    out.bound += c2 / n;
    for (const auto& [z, p] : dists[k].probs())
      out.per_bin[z] += c2 * (p - p * p) / n;
  }
  for (const auto& [z, v] : out.per_bin) out.total += v;
  return out;
}

ShotPlan optimal_shot_allocation(const LinearAnsatz& ansatz, std::uint64_t n_total) {
  const double gamma = ansatz.gamma();
  const std::size_t n_terms = ansatz.terms.size();
  if (n_total < n_terms)
    throw std::invalid_argument("n_total too small to give every term a shot");

  ShotPlan plan;
  plan.allocations.resize(n_terms);
  std::vector<std::pair<double, std::size_t>> remainders(n_terms);
  std::uint64_t assigned = 0;
  for (std::size_t k = 0; k < n_terms; ++k) {
    const double quota =
        double(n_total) * std::abs(ansatz.terms[k].coefficient) / gamma;
    const double floored = std::floor(quota);
    plan.allocations[k] = std::uint64_t(floored);
    assigned += plan.allocations[k];
    remainders[k] = {quota - floored, k};
  }
  // Largest remainder first; ties broken by term index.
  std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (std::size_t i = 0; assigned < n_total; ++i, ++assigned)
    ++plan.allocations[remainders[i % n_terms].second];

  for (std::uint64_t n : plan.allocations)
    if (n == 0)
      throw std::invalid_argument("n_total too small to give every term a shot");
  return plan;
}

}  // namespace qem
