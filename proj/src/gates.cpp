// SPDX-License-Identifier: Apache-2.0

#include "qemdist/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qem {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RZ: return "RZ";
    case GateKind::SX: return "SX";
    case GateKind::X: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::RZZ: return "RZZ";
  }
  return "?";
}

Gate Gate::rx(int qubit, double theta) { return {GateKind::RX, theta, {qubit, 0}, false}; }
Gate Gate::rz(int qubit, double theta) { return {GateKind::RZ, theta, {qubit, 0}, false}; }
Gate Gate::sx(int qubit) { return {GateKind::SX, 0.0, {qubit, 0}, false}; }
Gate Gate::x(int qubit) { return {GateKind::X, 0.0, {qubit, 0}, false}; }
Gate Gate::cnot(int control, int target) {
  return {GateKind::CNOT, 0.0, {control, target}, false};
}
Gate Gate::rzz(int a, int b, double theta) {
  return {GateKind::RZZ, theta, {a, b}, false};
}

Gate Gate::inverted() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::RX:
    case GateKind::RZ:
    case GateKind::RZZ:
      g.theta = -theta;
      g.inverse = inverse;  // already canonical
      break;
    case GateKind::X:
    case GateKind::CNOT:
      break;  // self-inverse
    case GateKind::SX:
      g.inverse = !inverse;
      break;
  }
  return g;
}

Mat2 adjoint(const Mat2& u) {
  return {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])};
}

Mat2 gate_matrix_1q(const Gate& g) {
  const cd i(0.0, 1.0);
  Mat2 u;
  switch (g.kind) {
    case GateKind::RX: {
      const double c = std::cos(g.theta / 2.0), s = std::sin(g.theta / 2.0);
      u = {cd(c, 0), -i * s, -i * s, cd(c, 0)};
      break;
    }
    case GateKind::RZ: {
      u = {std::exp(-i * (g.theta / 2.0)), cd(0, 0), cd(0, 0),
           std::exp(i * (g.theta / 2.0))};
      break;
    }
    case GateKind::SX:
      u = {cd(0.5, 0.5), cd(0.5, -0.5), cd(0.5, -0.5), cd(0.5, 0.5)};
      break;
    case GateKind::X:
      u = {cd(0, 0), cd(1, 0), cd(1, 0), cd(0, 0)};
      break;
    default:
      throw std::invalid_argument("gate_matrix_1q: two-qubit gate");
  }
  return g.inverse ? adjoint(u) : u;
}

}  // namespace qem
