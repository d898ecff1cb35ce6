// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qemdist/distribution.hpp"

namespace qem {

/// One noise-scaled measurement of a probability: value at stretch factor
/// lambda (lambda = 1 is the unamplified circuit). shots == 0 means exact.
struct MeasuredPoint {
  double lambda = 1.0;
  double value = 0.0;
  long long shots = 0;
};

enum class StrategyKind { linear, richardson, exponential, polyexp };

const char* to_string(StrategyKind kind);
std::optional<StrategyKind> strategy_from_string(const std::string& name);

/// Minimal number of points the strategy can run on.
int min_points(StrategyKind kind);

/// Fixed tie-break precedence: simplest model first.
int precedence(StrategyKind kind);

struct FitResult {
  double mitigated = 0.0;  // value at lambda = 0
  std::optional<std::array<double, 3>> params;
  bool applicable = false;
  std::string flag;  // reason when not applicable
};

/// Exact line through 2 points, least-squares line beyond; evaluated at 0.
FitResult extrapolate_linear(std::span<const MeasuredPoint> points);

/// sum_l C_l v_l with C_l = prod_{l' != l} l'/(l' - l); order = #points - 1.
FitResult extrapolate_richardson(std::span<const MeasuredPoint> points);

/// Fit log v = alpha + beta lambda (exact with 2 points, least squares
/// beyond) and return exp(alpha). Inapplicable on any non-positive value.
FitResult extrapolate_exponential(std::span<const MeasuredPoint> points);

/// Fit log v = log t0 + t1 lambda + t2 lambda^2 by linear least squares
/// (exact interpolation with 3 points) and return t0. Inapplicable on any
/// non-positive value.
FitResult extrapolate_polyexp(std::span<const MeasuredPoint> points);

FitResult extrapolate(StrategyKind kind, std::span<const MeasuredPoint> points);

std::vector<double> richardson_coefficients(std::span<const double> lambdas);

enum class BinFlag { ok, all_zero, fallback };

const char* to_string(BinFlag flag);

struct MitigationResult {
  QuasiDistribution quasi;
  std::map<std::uint64_t, BinFlag> flags;
};

/// Applies the strategy bin-by-bin over the union of supports. Bins that are
/// zero at every lambda are emitted as zero (flag all_zero); bins where the
/// strategy is inapplicable fall back to `fallback` (flag fallback).
/// `dists` must include lambda = 1 and enough points for the strategy.
MitigationResult mitigate_distribution(StrategyKind strategy,
                                       const std::map<double, Distribution>& dists,
                                       StrategyKind fallback = StrategyKind::linear);

enum class PostprocessMode { clip_renorm, raw };

/// clip_renorm clamps values to [0,1] and renormalizes (error when all
/// entries clip to zero); raw passes through.
QuasiDistribution postprocess(const QuasiDistribution& quasi, PostprocessMode mode);

/// clip_renorm with a validated Distribution result.
Distribution postprocess_clip_renorm(const QuasiDistribution& quasi);

}  // namespace qem
