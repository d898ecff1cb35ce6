// SPDX-License-Identifier: Apache-2.0

#include "qemdist/unitary.hpp"

#include <stdexcept>

#include "qemdist/density_matrix.hpp"

namespace qem {

void apply_gate_to_columns(Eigen::MatrixXcd& m, const Gate& g, int n_qubits) {
  validate_gate(g, n_qubits);
  const auto dim = m.rows();
  const std::uint64_t mask = qubit_mask(n_qubits, g.targets[0]);
  switch (g.kind) {
    case GateKind::CNOT: {
      const std::uint64_t tmask = qubit_mask(n_qubits, g.targets[1]);
      for (Eigen::Index r = 0; r < dim; ++r)
        if ((std::uint64_t(r) & mask) && std::uint64_t(r) < (std::uint64_t(r) ^ tmask))
          m.row(r).swap(m.row(Eigen::Index(std::uint64_t(r) ^ tmask)));
      break;
    }
    case GateKind::RZZ: {
      const std::uint64_t mask_b = qubit_mask(n_qubits, g.targets[1]);
      const double theta = g.inverse ? -g.theta : g.theta;
      const cd i(0.0, 1.0);
      const cd even = std::exp(-i * (theta / 2.0)), odd = std::exp(i * (theta / 2.0));
      for (Eigen::Index r = 0; r < dim; ++r) {
        const bool parity = ((r & mask) != 0) ^ ((r & mask_b) != 0);
        m.row(r) *= parity ? odd : even;
      }
      break;
    }
    default: {
      const Mat2 u = gate_matrix_1q(g);
      for (Eigen::Index r0 = 0; r0 < dim; ++r0) {
        if (std::uint64_t(r0) & mask) continue;
        const Eigen::Index r1 = Eigen::Index(std::uint64_t(r0) | mask);
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          const cd a = m(r0, c), b = m(r1, c);
          m(r0, c) = u[0] * a + u[1] * b;
          m(r1, c) = u[2] * a + u[3] * b;
        }
      }
      break;
    }
  }
}

Eigen::MatrixXcd exact_unitary(const Circuit& circuit) {
  if (circuit.n_qubits > 6)
    throw std::invalid_argument("exact_unitary limited to width <= 6");
  const Eigen::Index dim = Eigen::Index(1) << circuit.n_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate& g : circuit.gates) apply_gate_to_columns(u, g, circuit.n_qubits);
  return u;
}

}  // namespace qem
