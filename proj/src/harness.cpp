// SPDX-License-Identifier: Apache-2.0

#include "qemdist/harness.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>
#include <stdexcept>

#include "qemdist/folding.hpp"
#include "qemdist/rng.hpp"
#include "qemdist/sampling.hpp"
#include "qemdist/simulator.hpp"
#include "qemdist/trotter.hpp"

namespace qem {

std::uint64_t derive_run_seed(std::uint64_t master_seed, double j, double b, int m) {
  std::uint64_t s = splitmix64(master_seed);
  s = mix_seed(s, std::bit_cast<std::uint64_t>(j));
  s = mix_seed(s, std::bit_cast<std::uint64_t>(b));
  s = mix_seed(s, std::uint64_t(m));
  return s;
}

namespace {

// Lambda subset each strategy consumes: linear and exponential use the two
// smallest scale factors, richardson the three smallest (second order),
// polyexp everything. With the default factors {1,3,5} these reduce to the
// closed forms (3p_1 - p_3)/2, p_1^{3/2} p_3^{-1/2}, and the {15/8, -5/4,
// 3/8} combination.
std::size_t points_used(StrategyKind kind, std::size_t available) {
  switch (kind) {
    case StrategyKind::linear:
    case StrategyKind::exponential:
      return std::min<std::size_t>(2, available);
    case StrategyKind::richardson:
      return std::min<std::size_t>(3, available);
    case StrategyKind::polyexp:
      return available;
  }
  return available;
}

std::vector<StrategyKind> consistency_strategies(const ExperimentConfig& config) {
  std::vector<StrategyKind> out;
  for (StrategyKind s : config.strategies)
    if (min_points(s) <= config.subset_size) out.push_back(s);
  return out;
}

}  // namespace

RunRecord run_single(const ExperimentConfig& config, double j, double b, int m,
                     std::uint64_t seed) {
  config.validate();
  RunRecord rec;
  rec.j = j;
  rec.b = b;
  rec.m = m;
  rec.seed = seed;

  TFIParams params;
  params.n_qubits = config.n_qubits;
  params.coupling = j;
  params.field = b;
  params.duration = config.duration;
  params.trotter_steps = m;
  const Circuit circuit = build_trotter_tfi(params, config.boundary);

  rec.ideal = output_distribution(simulate(circuit, NoiseModel::none()), 0.0);

  for (int lambda : config.scale_factors) {
    Distribution dist = [&] {
      if (config.amplification == Amplification::fold) {
        const Circuit folded = fold_circuit(circuit, ScaleFactor(lambda));
        return output_distribution(simulate(folded, config.noise),
                                   config.noise.readout_flip);
      }
      const NoiseModel scaled = config.noise.gates_scaled(double(lambda));
      return output_distribution(simulate(circuit, scaled), scaled.readout_flip);
    }();
    if (config.shot_mode == ShotMode::sampled)
      dist = empirical_distribution(sample_counts(
          dist, std::uint64_t(config.n_meas), mix_seed(seed, std::uint64_t(lambda))));
    rec.noisy_by_lambda.emplace_back(lambda, std::move(dist));
  }

  // Per-strategy mitigation over that strategy's lambda subset.
  for (StrategyKind s : config.strategies) {
    const std::size_t use = points_used(s, rec.noisy_by_lambda.size());
    std::map<double, Distribution> subset;
    for (std::size_t i = 0; i < use; ++i)
      subset.emplace(double(rec.noisy_by_lambda[i].first),
                     rec.noisy_by_lambda[i].second);
    const MitigationResult mit = mitigate_distribution(s, subset);
    CandidateResult cand;
    cand.name = to_string(s);
    cand.output = postprocess(mit.quasi, config.postprocess);
    cand.tvd_to_ideal = half_l1(cand.output.values, rec.ideal.probs());
    rec.candidates.push_back(std::move(cand));
  }

  // N-version cross-comparison of the strategy outputs.
  {
    std::vector<std::pair<std::string, QuasiDistribution>> versions;
    for (const auto& c : rec.candidates) versions.emplace_back(c.name, c.output);
    rec.nversion = nversion_select_values(versions);
    rec.nversion_pick = rec.nversion.names[std::size_t(rec.nversion.selected_index)];
  }

  // Consistency-based per-bin selection over all scale factors.
  {
    std::map<double, Distribution> all;
    for (const auto& [lambda, d] : rec.noisy_by_lambda)
      all.emplace(double(lambda), d);
    const auto strategies = consistency_strategies(config);
    PerBinSelection sel = consistency_select_per_bin(all, config.subset_size,
                                                     strategies,
                                                     config.report_value);
    rec.consistency_tvd = tvd(sel.selected, rec.ideal);
    rec.consistency_output = std::move(sel.selected);
    rec.consistency_bins = std::move(sel.chosen);
  }

  if (config.experiment == ExperimentKind::consistency) {
    CandidateResult cand;
    cand.name = "consistency";
    cand.output.n_bits = rec.consistency_output.n_bits();
    cand.output.values = rec.consistency_output.probs();
    cand.tvd_to_ideal = rec.consistency_tvd;
    rec.candidates.push_back(std::move(cand));
  }

  // Rank by TVD ascending; ties keep candidate order.
  std::vector<std::size_t> order(rec.candidates.size());
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b2) {
    return rec.candidates[a].tvd_to_ideal < rec.candidates[b2].tvd_to_ideal;
  });
  for (std::size_t r = 0; r < order.size(); ++r)
    rec.candidates[order[r]].rank = int(r) + 1;
  rec.nversion_rank =
      rec.candidates[std::size_t(rec.nversion.selected_index)].rank;

  return rec;
}

SweepResult run_sweep(const ExperimentConfig& config) {
  config.validate();
  SweepResult result;
  result.config = config;

  struct Job {
    double j, b;
    int m;
  };
  std::vector<Job> jobs;
  for (int m : config.m_range)
    for (int j : config.j_range)
      for (int b : config.b_range) jobs.push_back({double(j), double(b), m});

  result.records.resize(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const std::ptrdiff_t n_jobs = std::ptrdiff_t(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n_jobs; ++i) {
    const Job& job = jobs[std::size_t(i)];
    try {
      result.records[std::size_t(i)] =
          run_single(config, job.j, job.b, job.m,
                     derive_run_seed(config.master_seed, job.j, job.b, job.m));
    } catch (...) {
      errors[std::size_t(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  result.summary = summarize(config, result.records);
  return result;
}

std::vector<SummaryRow> summarize(const ExperimentConfig& config,
                                  std::span<const RunRecord> records) {
  if (records.empty()) throw std::invalid_argument("no records to summarize");

  std::vector<std::string> methods;
  for (const auto& c : records.front().candidates) methods.push_back(c.name);
  const int n_ranks = int(methods.size());
  if (config.experiment == ExperimentKind::nversion)
    methods.push_back("nversion_selected");

  std::vector<int> m_values;
  for (const auto& rec : records)
    if (std::find(m_values.begin(), m_values.end(), rec.m) == m_values.end())
      m_values.push_back(rec.m);

  std::vector<SummaryRow> rows;
  for (int m : m_values) {
    for (const auto& method : methods) {
      std::vector<int> counts(std::size_t(n_ranks), 0);
      for (const auto& rec : records) {
        if (rec.m != m) continue;
        if (method == "nversion_selected") {
          ++counts[std::size_t(rec.nversion_rank - 1)];
        } else {
          for (const auto& c : rec.candidates)
            if (c.name == method) ++counts[std::size_t(c.rank - 1)];
        }
      }
      for (int r = 0; r < n_ranks; ++r)
        rows.push_back({method, r + 1, counts[std::size_t(r)], m});
    }
  }
  return rows;
}

}  // namespace qem
