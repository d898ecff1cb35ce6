// SPDX-License-Identifier: Apache-2.0

#include "qemdist/extrapolate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qem {

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::linear: return "linear";
    case StrategyKind::richardson: return "richardson";
    case StrategyKind::exponential: return "exponential";
    case StrategyKind::polyexp: return "polyexp";
  }
  return "?";
}

std::optional<StrategyKind> strategy_from_string(const std::string& name) {
  if (name == "linear") return StrategyKind::linear;
  if (name == "richardson") return StrategyKind::richardson;
  if (name == "exponential") return StrategyKind::exponential;
  if (name == "polyexp") return StrategyKind::polyexp;
  return std::nullopt;
}

int min_points(StrategyKind kind) {
  return kind == StrategyKind::polyexp ? 3 : 2;
}

int precedence(StrategyKind kind) { return static_cast<int>(kind); }

const char* to_string(BinFlag flag) {
  switch (flag) {
    case BinFlag::ok: return "ok";
    case BinFlag::all_zero: return "all-zero";
    case BinFlag::fallback: return "fallback";
  }
  return "?";
}

namespace {

void require_distinct_lambdas(std::span<const MeasuredPoint> points, int minimum) {
  if (static_cast<int>(points.size()) < minimum)
    throw std::invalid_argument("extrapolation needs at least " +
                                std::to_string(minimum) + " points");
  std::set<double> seen;
  for (const auto& p : points)
    if (!seen.insert(p.lambda).second)
      throw std::invalid_argument("duplicate lambda in extrapolation points");
}

// Least-squares a + b*x evaluated at x = 0; exact through 2 points.
double intercept_of_line(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  if (n == 2)
    return (xs[1] * ys[0] - xs[0] * ys[1]) / (xs[1] - xs[0]);
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= double(n);
  mean_y /= double(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  const double slope = sxy / sxx;
  return mean_y - slope * mean_x;
}

}  // namespace

FitResult extrapolate_linear(std::span<const MeasuredPoint> points) {
  require_distinct_lambdas(points, 2);
  std::vector<double> xs, ys;
  for (const auto& p : points) {
    xs.push_back(p.lambda);
    ys.push_back(p.value);
  }
  FitResult r;
  r.mitigated = intercept_of_line(xs, ys);
  r.applicable = true;
  return r;
}

std::vector<double> richardson_coefficients(std::span<const double> lambdas) {
  std::vector<double> coeffs(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    double c = 1.0;
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      if (j == i) continue;
      c *= lambdas[j] / (lambdas[j] - lambdas[i]);
    }
    coeffs[i] = c;
  }
  return coeffs;
}

FitResult extrapolate_richardson(std::span<const MeasuredPoint> points) {
  require_distinct_lambdas(points, 2);
  std::vector<double> lambdas;
  for (const auto& p : points) lambdas.push_back(p.lambda);
  const auto coeffs = richardson_coefficients(lambdas);
  FitResult r;
  r.mitigated = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    r.mitigated += coeffs[i] * points[i].value;
  r.applicable = true;
  return r;
}

FitResult extrapolate_exponential(std::span<const MeasuredPoint> points) {
  require_distinct_lambdas(points, 2);
  FitResult r;
  for (const auto& p : points) {
    if (p.value <= 0.0) {
      r.applicable = false;
      r.flag = "nonpositive value";
      return r;
    }
  }
  std::vector<double> xs, logs;
  for (const auto& p : points) {
    xs.push_back(p.lambda);
    logs.push_back(std::log(p.value));
  }
  const double alpha = intercept_of_line(xs, logs);
  // Recover beta for the params triple.
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += logs[i];
  }
  mean_x /= double(xs.size());
  mean_y /= double(xs.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (logs[i] - mean_y);
  }
  r.mitigated = std::exp(alpha);
  r.params = {r.mitigated, sxy / sxx, 0.0};
  r.applicable = true;
  return r;
}

FitResult extrapolate_polyexp(std::span<const MeasuredPoint> points) {
  require_distinct_lambdas(points, 3);
  FitResult r;
  for (const auto& p : points) {
    if (p.value <= 0.0) {
      r.applicable = false;
      r.flag = "nonpositive value";
      return r;
    }
  }
  const Eigen::Index n = Eigen::Index(points.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = points[std::size_t(i)].lambda;
    a(i, 0) = 1.0;
    a(i, 1) = lam;
    a(i, 2) = lam * lam;
    b(i) = std::log(points[std::size_t(i)].value);
  }
  const Eigen::Vector3d theta = a.colPivHouseholderQr().solve(b);
  r.mitigated = std::exp(theta(0));
  r.params = {r.mitigated, theta(1), theta(2)};
  r.applicable = true;
  return r;
}

FitResult extrapolate(StrategyKind kind, std::span<const MeasuredPoint> points) {
  switch (kind) {
    case StrategyKind::linear: return extrapolate_linear(points);
    case StrategyKind::richardson: return extrapolate_richardson(points);
    case StrategyKind::exponential: return extrapolate_exponential(points);
    case StrategyKind::polyexp: return extrapolate_polyexp(points);
  }
  throw std::logic_error("unknown strategy");
}

MitigationResult mitigate_distribution(StrategyKind strategy,
                                       const std::map<double, Distribution>& dists,
                                       StrategyKind fallback) {
  if (static_cast<int>(dists.size()) < min_points(strategy))
    throw std::invalid_argument("not enough noise levels for strategy");
  if (!dists.count(1.0))
    throw std::invalid_argument("mitigation requires the lambda = 1 distribution");

  int n_bits = 0;
  std::set<std::uint64_t> support;
  for (const auto& [lam, d] : dists) {
    if (n_bits == 0) n_bits = d.n_bits();
    if (d.n_bits() != n_bits)
      throw std::invalid_argument("distributions disagree on n_bits");
    for (const auto& [z, p] : d.probs()) support.insert(z);
  }

  MitigationResult out;
  out.quasi.n_bits = n_bits;
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
      out.quasi.values[z] = 0.0;
      out.flags[z] = BinFlag::all_zero;
      continue;
    }
    FitResult fit = extrapolate(strategy, points);
    if (fit.applicable) {
      out.quasi.values[z] = fit.mitigated;
      out.flags[z] = BinFlag::ok;
    } else {
      fit = extrapolate(fallback, points);
      out.quasi.values[z] = fit.mitigated;
      out.flags[z] = BinFlag::fallback;
    }
  }
  return out;
}

QuasiDistribution postprocess(const QuasiDistribution& quasi, PostprocessMode mode) {
  if (mode == PostprocessMode::raw) return quasi;
  QuasiDistribution out;
  out.n_bits = quasi.n_bits;
  double sum = 0.0;
  for (const auto& [z, v] : quasi.values) {
    const double clipped = std::clamp(v, 0.0, 1.0);
    if (clipped > 0.0) out.values[z] = clipped;
    sum += clipped;
  }
  if (sum <= 0.0)
    throw std::invalid_argument("all values clipped to zero; cannot renormalize");
  for (auto& [z, v] : out.values) v /= sum;
  return out;
}

Distribution postprocess_clip_renorm(const QuasiDistribution& quasi) {
  const QuasiDistribution q = postprocess(quasi, PostprocessMode::clip_renorm);
  return Distribution(q.n_bits, q.values);
}

}  // namespace qem
