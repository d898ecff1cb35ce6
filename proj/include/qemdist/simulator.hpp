// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "qemdist/circuit.hpp"
#include "qemdist/density_matrix.hpp"
#include "qemdist/distribution.hpp"
#include "qemdist/kernels.hpp"
#include "qemdist/noise.hpp"

namespace qem {

struct SimOptions {
  int max_qubits = 12;
  kernels::Backend backend = kernels::default_backend();
};

/// rho' = U rho U^dagger for the gate unitary.
DensityMatrix apply_gate(DensityMatrix state, const Gate& g,
                         kernels::Backend be = kernels::default_backend());

/// Depolarizing channel on a set of distinct target qubits.
DensityMatrix apply_depolarizing(DensityMatrix state, std::span<const int> targets,
                                 double rate,
                                 kernels::Backend be = kernels::default_backend());

/// Runs the circuit from |0...0>, applying each gate followed by a
/// depolarizing channel on its targets (eps1 for 1-qubit, eps2 for 2-qubit).
DensityMatrix simulate(const Circuit& circuit, const NoiseModel& noise,
                       const SimOptions& opts = {});

/// Diagonal of the state pushed through the per-bit classical readout flip
/// channel. Throws std::runtime_error on a significantly negative diagonal
/// entry (< -1e-10); smaller negatives are clamped to zero.
Distribution output_distribution(const DensityMatrix& state, double readout_flip,
                                 kernels::Backend be = kernels::default_backend());

}  // namespace qem
