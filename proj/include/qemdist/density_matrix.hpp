// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qemdist/gates.hpp"

namespace qem {

/// Basis-state index convention, fixed project-wide: bitstring z maps to an
/// integer with qubit 0 as the MOST significant bit. Qubit q therefore owns
/// bit position (n_qubits - 1 - q).
inline std::uint64_t qubit_mask(int n_qubits, int qubit) {
  return std::uint64_t(1) << (n_qubits - 1 - qubit);
}

/// Dense 2^n x 2^n mixed state, row-major. Constructed in |0...0><0...0|.
class DensityMatrix {
 public:
  explicit DensityMatrix(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t(1) << n_qubits_; }

  cd& at(std::size_t row, std::size_t col) { return data_[row * dim() + col]; }
  const cd& at(std::size_t row, std::size_t col) const {
    return data_[row * dim() + col];
  }

  std::vector<cd>& data() { return data_; }
  const std::vector<cd>& data() const { return data_; }

  double trace_real() const;

  /// Max elementwise |rho - rho^dagger|.
  double hermiticity_defect() const;

  /// Real parts of the diagonal, indexed by basis state.
  std::vector<double> diagonal_real() const;

 private:
  int n_qubits_;
  std::vector<cd> data_;
};

}  // namespace qem
