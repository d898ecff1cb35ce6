// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "qemdist/circuit.hpp"

namespace qem {

/// Transverse-field Ising evolution parameters:
///   H = J * sum_j Z_j Z_{j+1} + B * sum_j X_j
/// evolved for duration t, approximated by `trotter_steps` first-order steps.
struct TFIParams {
  int n_qubits = 2;
  double coupling = 1.0;   // J
  double field = 1.0;      // B
  double duration = 1.0;   // t
  int trotter_steps = 1;   // M

  /// Throws std::invalid_argument unless n_qubits >= 2, steps >= 1, t > 0.
  void validate() const;
};

enum class Boundary { open, periodic };

/// First-order Trotter circuit for exp(-i H t): per step, RX(2Bt/M) on every
/// qubit followed by the ZZ couplings realized as CNOT . RZ(2Jt/M) . CNOT on
/// each neighboring pair (plus the wrap-around pair when periodic).
Circuit build_trotter_tfi(const TFIParams& params, Boundary boundary = Boundary::open);

/// Dense H as a matrix (width <= 6).
Eigen::MatrixXcd tfi_hamiltonian(const TFIParams& params,
                                 Boundary boundary = Boundary::open);

/// Operator norm of exp(-i H t) minus the exact unitary of the Trotter
/// circuit. Width <= 6.
double trotter_defect(const TFIParams& params, Boundary boundary = Boundary::open);

}  // namespace qem
