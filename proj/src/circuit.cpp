// SPDX-License-Identifier: Apache-2.0

#include "qemdist/circuit.hpp"

#include <stdexcept>
#include <string>

namespace qem {

Circuit::Circuit(int n_qubits) : n_qubits(n_qubits) {
  if (n_qubits <= 0) throw std::invalid_argument("circuit width must be positive");
}

void validate_gate(const Gate& g, int n_qubits) {
  for (int k = 0; k < g.arity(); ++k) {
    if (g.targets[k] < 0 || g.targets[k] >= n_qubits)
      throw std::out_of_range("gate target " + std::to_string(g.targets[k]) +
                              " out of range for width " + std::to_string(n_qubits));
  }
  if (g.arity() == 2 && g.targets[0] == g.targets[1])
    throw std::out_of_range("two-qubit gate targets must be distinct");
}

void Circuit::append(const Gate& g) {
  validate_gate(g, n_qubits);
  gates.push_back(g);
}

}  // namespace qem
