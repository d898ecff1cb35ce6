// SPDX-License-Identifier: Apache-2.0

#include "qemdist/density_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qem {

DensityMatrix::DensityMatrix(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits <= 0 || n_qubits > 30)
    throw std::invalid_argument("density matrix width out of range");
  data_.assign(dim() * dim(), cd(0.0, 0.0));
  data_[0] = cd(1.0, 0.0);
}

double DensityMatrix::trace_real() const {
  const std::size_t d = dim();
  double tr = 0.0;
  for (std::size_t i = 0; i < d; ++i) tr += data_[i * d + i].real();
  return tr;
}

double DensityMatrix::hermiticity_defect() const {
  const std::size_t d = dim();
  double worst = 0.0;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = r; c < d; ++c)
      worst = std::max(worst, std::abs(data_[r * d + c] - std::conj(data_[c * d + r])));
  return worst;
}

std::vector<double> DensityMatrix::diagonal_real() const {
  const std::size_t d = dim();
  std::vector<double> diag(d);
  for (std::size_t i = 0; i < d; ++i) diag[i] = data_[i * d + i].real();
  return diag;
}

}  // namespace qem
