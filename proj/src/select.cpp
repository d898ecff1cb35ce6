// SPDX-License-Identifier: Apache-2.0

#include "qemdist/select.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace qem {

double half_l1(const std::map<std::uint64_t, double>& p,
               const std::map<std::uint64_t, double>& q) {
  double sum = 0.0;
  auto ip = p.begin();
  auto iq = q.begin();
  while (ip != p.end() || iq != q.end()) {
    if (iq == q.end() || (ip != p.end() && ip->first < iq->first)) {
      sum += std::abs(ip->second);
      ++ip;
    } else if (ip == p.end() || iq->first < ip->first) {
      sum += std::abs(iq->second);
      ++iq;
    } else {
      sum += std::abs(ip->second - iq->second);
      ++ip;
      ++iq;
    }
  }
  return 0.5 * sum;
}

double tvd(const Distribution& p, const Distribution& q) {
  if (p.n_bits() != q.n_bits())
    throw std::invalid_argument("tvd requires equal widths");
  return half_l1(p.probs(), q.probs());
}

namespace {

NVReport nversion_over_maps(
    const std::vector<std::pair<std::string, const std::map<std::uint64_t, double>*>>&
        candidates) {
  const std::size_t n = candidates.size();
  if (n < 3)
    throw std::invalid_argument("n-version selection needs at least 3 candidates");
  NVReport report;
  report.names.reserve(n);
  for (const auto& [name, values] : candidates) report.names.push_back(name);
  report.tvd_matrix.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = half_l1(*candidates[i].second, *candidates[j].second);
      report.tvd_matrix[i][j] = d;
      report.tvd_matrix[j][i] = d;
    }
  report.row_sums.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += report.tvd_matrix[i][j];
    report.row_sums[i] = s;
  }
  report.selected_index = int(std::min_element(report.row_sums.begin(),
                                               report.row_sums.end()) -
                              report.row_sums.begin());
  report.outlier_index = int(std::max_element(report.row_sums.begin(),
                                              report.row_sums.end()) -
                             report.row_sums.begin());
  return report;
}

}  // namespace

NVReport nversion_select(
    std::span<const std::pair<std::string, Distribution>> candidates) {
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (candidates[i].second.n_bits() != candidates[0].second.n_bits())
      throw std::invalid_argument("candidates disagree on n_bits");
  std::vector<std::pair<std::string, const std::map<std::uint64_t, double>*>> maps;
  maps.reserve(candidates.size());
  for (const auto& [name, dist] : candidates) maps.emplace_back(name, &dist.probs());
  return nversion_over_maps(maps);
}

NVReport nversion_select_values(
    std::span<const std::pair<std::string, QuasiDistribution>> candidates) {
  std::vector<std::pair<std::string, const std::map<std::uint64_t, double>*>> maps;
  maps.reserve(candidates.size());
  for (const auto& [name, q] : candidates) maps.emplace_back(name, &q.values);
  return nversion_over_maps(maps);
}

namespace {

// Lexicographic enumeration of all size-l index subsets of [0, k).
void for_each_subset(int k, int l,
                     const std::function<void(std::span<const int>)>& fn) {
  std::vector<int> idx(l);
  for (int i = 0; i < l; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int pos = l - 1;
    while (pos >= 0 && idx[pos] == k - l + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < l; ++i) idx[i] = idx[i - 1] + 1;
  }
}

double population_variance(std::span<const double> values) {
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= double(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  return var / double(values.size());
}

}  // namespace

ConsistencyReport consistency_select(std::span<const MeasuredPoint> points, int l,
                                     std::span<const StrategyKind> strategies) {
  const int k = static_cast<int>(points.size());
  if (l < 2 || l >= k)
    throw std::invalid_argument("subset size L must satisfy 2 <= L < K");
  if (strategies.empty())
    throw std::invalid_argument("consistency selection needs strategies");
  std::set<double> lambdas;
  bool has_base = false;
  for (const auto& p : points) {
    if (!lambdas.insert(p.lambda).second)
      throw std::invalid_argument("duplicate lambda in consistency points");
    if (p.lambda == 1.0) has_base = true;
  }
  if (!has_base)
    throw std::invalid_argument("consistency points must include lambda = 1");
  for (StrategyKind s : strategies)
    if (l < min_points(s))
      throw std::invalid_argument(std::string(to_string(s)) +
                                  " cannot run on L = " + std::to_string(l) +
                                  " points");

  ConsistencyReport report;
  report.k = k;
  report.l = l;
  std::vector<MeasuredPoint> subset(l);
  for (StrategyKind s : strategies) {
    StrategyConsistency sc;
    sc.kind = s;
    sc.applicable = true;
    for_each_subset(k, l, [&](std::span<const int> idx) {
      if (!sc.applicable) return;
      for (int i = 0; i < l; ++i) subset[std::size_t(i)] = points[std::size_t(idx[i])];
      const FitResult fit = extrapolate(s, subset);
      if (!fit.applicable) {
        sc.applicable = false;  // any inapplicable subset disqualifies
        sc.values.clear();
        return;
      }
      sc.values.push_back(fit.mitigated);
    });
    if (sc.applicable) sc.variance = population_variance(sc.values);
    report.strategies.push_back(std::move(sc));
  }

  // Choose the smallest variance, scanning in precedence order so that ties
  // (including collapsed near-zero variances) go to the simplest model.
  std::vector<const StrategyConsistency*> ordered;
  for (const auto& sc : report.strategies)
    if (sc.applicable) ordered.push_back(&sc);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return precedence(a->kind) < precedence(b->kind);
  });
  if (ordered.empty())
    throw std::invalid_argument("no applicable strategy for these points");
  const StrategyConsistency* best = nullptr;
  double best_var = 0.0;
  for (const auto* sc : ordered) {
    const double v = sc->variance <= kZeroVariance ? 0.0 : sc->variance;
    if (best == nullptr || v < best_var) {
      best = sc;
      best_var = v;
    }
  }
  report.chosen = best->kind;
  return report;
}

PerBinSelection consistency_select_per_bin(
    const std::map<double, Distribution>& dists, int l,
    std::span<const StrategyKind> strategies, ReportValue value) {
  if (dists.empty()) throw std::invalid_argument("no distributions given");
  int n_bits = dists.begin()->second.n_bits();
  std::set<std::uint64_t> support;
  for (const auto& [lam, d] : dists) {
    if (d.n_bits() != n_bits)
      throw std::invalid_argument("distributions disagree on n_bits");
    for (const auto& [z, p] : d.probs()) support.insert(z);
  }

  PerBinSelection out;
  QuasiDistribution assembled;
  assembled.n_bits = n_bits;

  std::vector<MeasuredPoint> points(dists.size());
  for (std::uint64_t z : support) {
    std::size_t i = 0;
    bool all_zero = true;
    for (const auto& [lam, d] : dists) {
      const double v = d.at(z);
      points[i++] = {lam, v, 0};
      if (v != 0.0) all_zero = false;
    }
    if (all_zero) {
      assembled.values[z] = 0.0;
      out.chosen[z] = "none";
      continue;
    }
    ConsistencyReport report = consistency_select(points, l, strategies);
    const StrategyKind chosen = *report.chosen;
    double mitigated = 0.0;
    if (value == ReportValue::subset_mean) {
      for (const auto& sc : report.strategies)
        if (sc.kind == chosen) {
          double mean = 0.0;
          for (double v : sc.values) mean += v;
          mitigated = mean / double(sc.values.size());
        }
    } else if (chosen == StrategyKind::richardson) {
      // Canonical subset: the L smallest lambdas (points are ascending).
      mitigated =
          extrapolate_richardson({points.data(), std::size_t(l)}).mitigated;
    } else {
      mitigated = extrapolate(chosen, points).mitigated;
    }
    assembled.values[z] = mitigated;
    out.chosen[z] = to_string(chosen);
    out.reports.emplace(z, std::move(report));
  }

  out.selected = postprocess_clip_renorm(assembled);
  return out;
}

}  // namespace qem
