// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "qemdist/circuit.hpp"

namespace qem {

/// Dense product of the gate unitaries in application order. Limited to
/// width <= 6 (matrix is 2^n x 2^n); throws std::invalid_argument beyond.
Eigen::MatrixXcd exact_unitary(const Circuit& circuit);

/// Applies one gate to every column of `m` (each column treated as a
/// statevector), i.e. m <- U_g m.
void apply_gate_to_columns(Eigen::MatrixXcd& m, const Gate& g, int n_qubits);

}  // namespace qem
