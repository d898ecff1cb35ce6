// SPDX-License-Identifier: Apache-2.0

#include "qemdist/folding.hpp"

#include <stdexcept>

namespace qem {

ScaleFactor::ScaleFactor(int v) : value(v) {
  if (v < 1 || v % 2 == 0)
    throw std::invalid_argument("scale factor must be an odd positive integer");
}

Circuit fold_circuit(const Circuit& circuit, ScaleFactor lambda) {
  Circuit folded(circuit.n_qubits);
  folded.gates.reserve(circuit.gates.size() * std::size_t(lambda.value));
  const int rounds = (lambda.value - 1) / 2;
  for (const Gate& g : circuit.gates) {
    folded.append(g);
    for (int r = 0; r < rounds; ++r) {
      folded.append(g.inverted());
      folded.append(g);
    }
  }
  return folded;
}

}  // namespace qem
