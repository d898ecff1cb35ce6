// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace qem {

/// Parametric noise model: depolarizing probability per 1- and 2-qubit gate
/// plus a classical per-bit readout flip probability.
struct NoiseModel {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double readout_flip = 0.0;

  static NoiseModel none() { return {}; }

  /// All rates multiplied by `factor` (rate-scaling noise amplification).
  /// Readout error is not a gate error and is left untouched.
  NoiseModel gates_scaled(double factor) const;

  /// Throws std::invalid_argument unless every rate is in [0, 1].
  void validate() const;
};

}  // namespace qem
