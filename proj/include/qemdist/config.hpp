// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qemdist/estimator.hpp"
#include "qemdist/extrapolate.hpp"
#include "qemdist/noise.hpp"
#include "qemdist/select.hpp"
#include "qemdist/trotter.hpp"

namespace qem {

enum class ShotMode { exact, sampled };
enum class ExperimentKind { nversion, consistency };

/// Sweep configuration. Mirrors the plain-text config file one key per
/// field; see README for the key reference.
struct ExperimentConfig {
  int n_qubits = 10;
  long long n_meas = 5000;  // per circuit per lambda in sampled mode
  double duration = 1.0;    // t
  std::vector<int> j_range = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<int> b_range = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<int> m_range = {5, 6, 7, 8, 9, 10};
  std::vector<int> scale_factors = {1, 3, 5};
  NoiseModel noise{0.001, 0.01, 0.01};
  Amplification amplification = Amplification::fold;
  int subset_size = 2;  // L
  std::vector<StrategyKind> strategies = {StrategyKind::linear,
                                          StrategyKind::richardson,
                                          StrategyKind::exponential,
                                          StrategyKind::polyexp};
  PostprocessMode postprocess = PostprocessMode::clip_renorm;
  std::uint64_t master_seed = 20250810;
  Boundary boundary = Boundary::open;
  ShotMode shot_mode = ShotMode::exact;
  ExperimentKind experiment = ExperimentKind::nversion;
  ReportValue report_value = ReportValue::full_fit;

  void validate() const;

  /// Named presets: "nversion_experiment" ranks the four extrapolation
  /// strategies with the n-version pick recorded; "consistency_experiment"
  /// ranks linear/richardson/exponential plus the consistency-based
  /// candidate. Both run the desk-scale grid (5 qubits, J,B in 1..4,
  /// M in 5..10, exact distributions).
  static ExperimentConfig preset(const std::string& name);

  /// Applies `key = value` lines from a config file on top of *this.
  /// Unknown keys are an error.
  void apply_file(const std::string& path);
  void apply_text(const std::string& text);
};

const char* to_string(ShotMode m);
const char* to_string(ExperimentKind k);
const char* to_string(Amplification a);
const char* to_string(Boundary b);
const char* to_string(PostprocessMode m);
const char* to_string(ReportValue v);

}  // namespace qem
