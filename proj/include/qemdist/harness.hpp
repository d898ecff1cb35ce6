// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qemdist/config.hpp"
#include "qemdist/distribution.hpp"
#include "qemdist/select.hpp"

namespace qem {

struct CandidateResult {
  std::string name;
  QuasiDistribution output;  // post-processed values used for ranking
  double tvd_to_ideal = 0.0;
  int rank = 0;  // 1-based; ties broken by candidate order
};

struct RunRecord {
  double j = 0.0;
  double b = 0.0;
  int m = 0;
  std::uint64_t seed = 0;
  Distribution ideal;
  std::vector<std::pair<int, Distribution>> noisy_by_lambda;
  std::vector<CandidateResult> candidates;  // the ranked set
  NVReport nversion;                        // over the strategy outputs
  std::string nversion_pick;
  int nversion_rank = 0;  // rank of the picked strategy among candidates
  Distribution consistency_output;
  double consistency_tvd = 0.0;
  std::map<std::uint64_t, std::string> consistency_bins;  // per-bin strategy
};

struct SummaryRow {
  std::string method;
  int rank = 0;
  int count = 0;
  int m = 0;
};

struct SweepResult {
  ExperimentConfig config;
  std::vector<RunRecord> records;
  std::vector<SummaryRow> summary;
};

/// Deterministic per-run stream: a splitmix64 chain over the master seed and
/// the bit patterns of (J, B, M).
std::uint64_t derive_run_seed(std::uint64_t master_seed, double j, double b, int m);

RunRecord run_single(const ExperimentConfig& config, double j, double b, int m,
                     std::uint64_t seed);

/// Runs the full J x B grid for every M. Runs execute in parallel; records
/// land in deterministic (M, J, B) order, so outputs are reproducible bytes.
SweepResult run_sweep(const ExperimentConfig& config);

/// Rank counts per (M, method, rank). In an n-version experiment the pick is
/// aggregated as pseudo-method "nversion_selected".
std::vector<SummaryRow> summarize(const ExperimentConfig& config,
                                  std::span<const RunRecord> records);

}  // namespace qem
