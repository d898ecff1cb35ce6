// SPDX-License-Identifier: Apache-2.0

#include "qemdist/trotter.hpp"

#include <stdexcept>

#include "qemdist/density_matrix.hpp"
#include "qemdist/unitary.hpp"

namespace qem {

void TFIParams::validate() const {
  if (n_qubits < 2) throw std::invalid_argument("TFI chain needs at least 2 sites");
  if (trotter_steps < 1) throw std::invalid_argument("trotter_steps must be >= 1");
  if (!(duration > 0.0)) throw std::invalid_argument("duration must be positive");
}

Circuit build_trotter_tfi(const TFIParams& p, Boundary boundary) {
  p.validate();
  const double dt = p.duration / p.trotter_steps;
  const double rx_angle = 2.0 * p.field * dt;
  const double rz_angle = 2.0 * p.coupling * dt;
  Circuit c(p.n_qubits);
  auto zz_block = [&](int a, int b) {
    c.append(Gate::cnot(a, b));
    c.append(Gate::rz(b, rz_angle));
    c.append(Gate::cnot(a, b));
  };
  for (int step = 0; step < p.trotter_steps; ++step) {
    for (int q = 0; q < p.n_qubits; ++q) c.append(Gate::rx(q, rx_angle));
    for (int q = 0; q + 1 < p.n_qubits; ++q) zz_block(q, q + 1);
    if (boundary == Boundary::periodic) zz_block(p.n_qubits - 1, 0);
  }
  return c;
}

Eigen::MatrixXcd tfi_hamiltonian(const TFIParams& p, Boundary boundary) {
  p.validate();
  if (p.n_qubits > 6)
    throw std::invalid_argument("dense Hamiltonian limited to width <= 6");
  const Eigen::Index dim = Eigen::Index(1) << p.n_qubits;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

  // ZZ couplings are diagonal: Z_a Z_b |z> = (+-1) |z> by bit parity.
  auto add_zz = [&](int a, int b) {
    const std::uint64_t ma = qubit_mask(p.n_qubits, a);
    const std::uint64_t mb = qubit_mask(p.n_qubits, b);
    for (Eigen::Index z = 0; z < dim; ++z) {
      const bool parity = ((z & ma) != 0) ^ ((z & mb) != 0);
      h(z, z) += parity ? -p.coupling : p.coupling;
    }
  };
  for (int q = 0; q + 1 < p.n_qubits; ++q) add_zz(q, q + 1);
  if (boundary == Boundary::periodic) add_zz(p.n_qubits - 1, 0);

  for (int q = 0; q < p.n_qubits; ++q) {
    const std::uint64_t m = qubit_mask(p.n_qubits, q);
    for (Eigen::Index z = 0; z < dim; ++z)
      h(Eigen::Index(std::uint64_t(z) ^ m), z) += p.field;
  }
  return h;
}

double trotter_defect(const TFIParams& p, Boundary boundary) {
  const Eigen::MatrixXcd h = tfi_hamiltonian(p, boundary);
  // H is Hermitian, so exp(-iHt) = V exp(-i E t) V^dagger.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const auto& evals = es.eigenvalues();
  const auto& v = es.eigenvectors();
  Eigen::VectorXcd phases(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i)
    phases(i) = std::exp(cd(0.0, -evals(i) * p.duration));
  const Eigen::MatrixXcd u_exact = v * phases.asDiagonal() * v.adjoint();
  const Eigen::MatrixXcd u_circ = exact_unitary(build_trotter_tfi(p, boundary));
  return (u_exact - u_circ).operatorNorm();
}

}  // namespace qem
