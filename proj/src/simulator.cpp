// SPDX-License-Identifier: Apache-2.0

#include "qemdist/simulator.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qem {

namespace {

std::vector<std::uint64_t> sorted_masks(int n_qubits, std::span<const int> targets) {
  std::vector<std::uint64_t> masks;
  masks.reserve(targets.size());
  for (int q : targets) {
    if (q < 0 || q >= n_qubits) throw std::out_of_range("target out of range");
    masks.push_back(qubit_mask(n_qubits, q));
  }
  std::sort(masks.begin(), masks.end());
  if (std::adjacent_find(masks.begin(), masks.end()) != masks.end())
    throw std::invalid_argument("depolarizing targets must be distinct");
  return masks;
}

}  // namespace

DensityMatrix apply_gate(DensityMatrix state, const Gate& g, kernels::Backend be) {
  const int n = state.n_qubits();
  validate_gate(g, n);
  const std::size_t dim = state.dim();
  switch (g.kind) {
    case GateKind::CNOT:
      kernels::apply_cnot(state.data().data(), dim, qubit_mask(n, g.targets[0]),
                          qubit_mask(n, g.targets[1]), be);
      break;
    case GateKind::RZZ:
      kernels::apply_rzz(state.data().data(), dim, qubit_mask(n, g.targets[0]),
                         qubit_mask(n, g.targets[1]),
                         g.inverse ? -g.theta : g.theta, be);
      break;
    default:
      kernels::apply_unitary_1q(state.data().data(), dim,
                                qubit_mask(n, g.targets[0]), gate_matrix_1q(g), be);
      break;
  }
  return state;
}

DensityMatrix apply_depolarizing(DensityMatrix state, std::span<const int> targets,
                                 double rate, kernels::Backend be) {
  if (rate < 0.0 || rate > 1.0)
    throw std::invalid_argument("depolarizing rate must lie in [0, 1]");
  const auto masks = sorted_masks(state.n_qubits(), targets);
  kernels::depolarize(state.data().data(), state.dim(), masks, rate, be);
  return state;
}

DensityMatrix simulate(const Circuit& circuit, const NoiseModel& noise,
                       const SimOptions& opts) {
  if (circuit.n_qubits > opts.max_qubits)
    throw std::invalid_argument("circuit width " + std::to_string(circuit.n_qubits) +
                                " exceeds configured maximum " +
                                std::to_string(opts.max_qubits));
  noise.validate();
  DensityMatrix rho(circuit.n_qubits);
  for (const Gate& g : circuit.gates) {
    rho = apply_gate(std::move(rho), g, opts.backend);
    const double rate = g.arity() == 1 ? noise.eps1 : noise.eps2;
    if (rate > 0.0) {
      std::array<int, 2> targets{g.targets[0], g.targets[1]};
      rho = apply_depolarizing(std::move(rho),
                               std::span<const int>(targets.data(), g.arity()),
                               rate, opts.backend);
    }
  }
  return rho;
}

Distribution output_distribution(const DensityMatrix& state, double readout_flip,
                                 kernels::Backend be) {
  if (readout_flip < 0.0 || readout_flip > 1.0)
    throw std::invalid_argument("readout flip probability must lie in [0, 1]");
  std::vector<double> probs = state.diagonal_real();
  for (double& p : probs) {
    if (p < -1e-10)
      throw std::runtime_error("significantly negative diagonal entry " +
                               std::to_string(p) + "; simulator invariant broken");
    if (p < 0.0) p = 0.0;
  }
  if (readout_flip > 0.0) {
    const int n = state.n_qubits();
    for (int q = 0; q < n; ++q)
      kernels::readout_flip_bit(probs.data(), probs.size(), qubit_mask(n, q),
                                readout_flip, be);
  }
  return Distribution::from_dense(state.n_qubits(), probs);
}

}  // namespace qem
