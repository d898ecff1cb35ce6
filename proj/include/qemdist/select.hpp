// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qemdist/distribution.hpp"
#include "qemdist/extrapolate.hpp"

namespace qem {

/// Total variation distance (1/2) sum_z |p_z - q_z| over the union of
/// supports. Throws on mismatched widths.
double tvd(const Distribution& p, const Distribution& q);

/// Same half-L1 formula on raw value maps; coincides with tvd on proper
/// distributions but is also defined for quasi-distributions.
double half_l1(const std::map<std::uint64_t, double>& p,
               const std::map<std::uint64_t, double>& q);

struct NVReport {
  std::vector<std::string> names;
  std::vector<std::vector<double>> tvd_matrix;  // symmetric, zero diagonal
  std::vector<double> row_sums;
  int selected_index = 0;  // argmin of row sums (earliest on ties)
  int outlier_index = 0;   // argmax of row sums (earliest on ties)
};

/// Cross-compares >= 3 candidate distributions and selects the one with the
/// smallest summed distance to the others; the largest is flagged as outlier.
NVReport nversion_select(
    std::span<const std::pair<std::string, Distribution>> candidates);

/// Same selection over raw value maps (quasi-distributions included).
NVReport nversion_select_values(
    std::span<const std::pair<std::string, QuasiDistribution>> candidates);

struct StrategyConsistency {
  StrategyKind kind = StrategyKind::linear;
  bool applicable = false;      // false when any subset fit was inapplicable
  std::vector<double> values;   // one mitigated value per size-L subset
  double variance = 0.0;        // population variance of `values`
};

struct ConsistencyReport {
  int k = 0;
  int l = 0;
  std::vector<StrategyConsistency> strategies;  // in input order
  std::optional<StrategyKind> chosen;
};

/// Subset variances at or below this are treated as exactly consistent, so
/// nested model families tie and precedence picks the simplest.
inline constexpr double kZeroVariance = 1e-18;

/// Evaluates every strategy on all C(K, L) subsets of the K points and
/// chooses the applicable strategy with the smallest variance (ties by
/// precedence: linear, richardson, exponential, polyexp).
ConsistencyReport consistency_select(std::span<const MeasuredPoint> points, int l,
                                     std::span<const StrategyKind> strategies);

enum class ReportValue { full_fit, subset_mean };

struct PerBinSelection {
  Distribution selected;  // assembled per-bin values, clipped + renormalized
  std::map<std::uint64_t, std::string> chosen;  // strategy name, or "none"
  std::map<std::uint64_t, ConsistencyReport> reports;
};

/// Runs consistency_select on every bin of the per-lambda distributions.
/// All-zero bins bypass selection and stay zero. The reported per-bin value
/// is the chosen strategy's full-data fit (least squares on all K points;
/// the L smallest lambdas for richardson) or the subset mean, per `value`.
PerBinSelection consistency_select_per_bin(
    const std::map<double, Distribution>& dists, int l,
    std::span<const StrategyKind> strategies,
    ReportValue value = ReportValue::full_fit);

}  // namespace qem
