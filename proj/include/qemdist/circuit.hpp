// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qemdist/gates.hpp"

namespace qem {

/// Gate-list program over `n_qubits` wires. Gates apply in list order.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n_qubits);

  /// Appends after validating that targets are distinct and in range.
  void append(const Gate& g);

  std::size_t size() const { return gates.size(); }
};

/// Throws std::out_of_range if the gate does not fit the circuit width.
void validate_gate(const Gate& g, int n_qubits);

}  // namespace qem
