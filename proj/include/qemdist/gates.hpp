// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

namespace qem {

using cd = std::complex<double>;

enum class GateKind { RX, RZ, SX, X, CNOT, RZZ };

const char* to_string(GateKind kind);

/// One gate in a circuit. Angles are in radians. `inverse` marks the adjoint
/// of the base gate; for rotations the adjoint is canonicalized to the
/// negated angle instead (see inverted()), so `inverse` only survives on SX.
struct Gate {
  GateKind kind = GateKind::X;
  double theta = 0.0;
  std::array<int, 2> targets{0, 0};
  bool inverse = false;

  int arity() const {
    return (kind == GateKind::CNOT || kind == GateKind::RZZ) ? 2 : 1;
  }

  static Gate rx(int qubit, double theta);
  static Gate rz(int qubit, double theta);
  static Gate sx(int qubit);
  static Gate x(int qubit);
  static Gate cnot(int control, int target);
  static Gate rzz(int a, int b, double theta);

  Gate inverted() const;
};

/// Row-major 2x2 complex matrix {u00, u01, u10, u11}.
using Mat2 = std::array<cd, 4>;

/// Unitary of a single-qubit gate, with `inverse` already folded in.
/// Throws std::invalid_argument for two-qubit kinds.
Mat2 gate_matrix_1q(const Gate& g);

Mat2 adjoint(const Mat2& u);

}  // namespace qem
