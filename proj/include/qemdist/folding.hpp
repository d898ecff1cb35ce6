// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qemdist/circuit.hpp"

namespace qem {

/// Odd positive noise scale factor for gate folding.
struct ScaleFactor {
  int value = 1;

  explicit ScaleFactor(int v);
};

/// Replaces each gate g by g (g^dagger g)^{(lambda-1)/2}. The unitary is
/// unchanged; the gate count becomes lambda times the original.
Circuit fold_circuit(const Circuit& circuit, ScaleFactor lambda);

}  // namespace qem
