// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "qemdist/density_matrix.hpp"
#include "qemdist/simulator.hpp"
#include "qemdist/unitary.hpp"
#include "test_helpers.hpp"

using namespace qem;
using kernels::Backend;

namespace {

// Independent 2x2 oracle: rho' = U rho U^dagger by hand.
std::array<cd, 4> conjugate_2x2(const std::array<cd, 4>& u,
                                const std::array<cd, 4>& rho) {
  std::array<cd, 4> ur{u[0] * rho[0] + u[1] * rho[2], u[0] * rho[1] + u[1] * rho[3],
                       u[2] * rho[0] + u[3] * rho[2], u[2] * rho[1] + u[3] * rho[3]};
  return {ur[0] * std::conj(u[0]) + ur[1] * std::conj(u[1]),
          ur[0] * std::conj(u[2]) + ur[1] * std::conj(u[3]),
          ur[2] * std::conj(u[0]) + ur[3] * std::conj(u[1]),
          ur[2] * std::conj(u[2]) + ur[3] * std::conj(u[3])};
}

Eigen::MatrixXcd to_eigen(const DensityMatrix& rho) {
  const Eigen::Index d = Eigen::Index(rho.dim());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = rho.at(std::size_t(r), std::size_t(c));
  return m;
}

}  // namespace

TEST_CASE("X flips a basis state") {
  DensityMatrix rho(1);
  rho = apply_gate(std::move(rho), Gate::x(0));
  CHECK(rho.at(1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(rho.at(0, 0)) < 1e-12);
}

TEST_CASE("RZ leaves a diagonal state invariant") {
  DensityMatrix rho(1);
  rho = apply_gate(std::move(rho), Gate::rz(0, 1.234));
  CHECK(std::abs(rho.at(0, 0) - cd(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(rho.at(1, 1)) < 1e-12);
}

TEST_CASE("RX(pi) maps |0> to |1> up to global phase") {
  DensityMatrix rho(1);
  rho = apply_gate(std::move(rho), Gate::rx(0, M_PI));
  // Oracle: direct 2x2 conjugation.
  const Mat2 u = gate_matrix_1q(Gate::rx(0, M_PI));
  const auto expect = conjugate_2x2(u, {cd(1, 0), cd(0, 0), cd(0, 0), cd(0, 0)});
  CHECK(std::abs(rho.at(0, 0) - expect[0]) < 1e-12);
  CHECK(std::abs(rho.at(1, 1) - expect[3]) < 1e-12);
  CHECK(rho.at(1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gates compose with their adjoints to the identity") {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = testing::random_circuit(rng, 3, 8);
    Circuit with_inverses(3);
    for (const Gate& g : c.gates) with_inverses.append(g);
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
      with_inverses.append(it->inverted());
    const Eigen::MatrixXcd u = exact_unitary(with_inverses);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    CHECK((u - id).operatorNorm() < 1e-12);
  }
}

TEST_CASE("depolarizing channel") {
  const std::array<int, 1> q0{0};

  SUBCASE("rate 0 is the identity") {
    DensityMatrix rho(1);
    rho = apply_gate(std::move(rho), Gate::rx(0, 0.7));
    const auto before = rho.data();
    rho = apply_depolarizing(std::move(rho), q0, 0.0);
    CHECK(rho.data() == before);
  }
  SUBCASE("rate 1 fully mixes one qubit") {
    DensityMatrix rho(1);
    rho = apply_depolarizing(std::move(rho), q0, 1.0);
    CHECK(rho.at(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rho.at(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
    const Distribution d = output_distribution(rho, 0.0);
    CHECK(d.at(0) == doctest::Approx(0.5));
    CHECK(d.at(1) == doctest::Approx(0.5));
  }
  SUBCASE("rate 0.1 on |0><0| gives diag(0.95, 0.05)") {
    DensityMatrix rho(1);
    rho = apply_depolarizing(std::move(rho), q0, 0.1);
    CHECK(rho.at(0, 0).real() == doctest::Approx(0.95).epsilon(1e-14));
    CHECK(rho.at(1, 1).real() == doctest::Approx(0.05).epsilon(1e-14));
  }
  SUBCASE("maximally mixed state is a fixed point at any rate") {
    for (double rate : {0.0, 0.3, 0.7, 1.0}) {
      DensityMatrix rho(2);
      // Build I/4 by fully depolarizing both qubits.
      const std::array<int, 2> both{0, 1};
      rho = apply_depolarizing(std::move(rho), both, 1.0);
      const auto before = rho.data();
      rho = apply_depolarizing(std::move(rho), q0, rate);
      const std::array<int, 2> pair{1, 0};
      rho = apply_depolarizing(std::move(rho), pair, rate);
      for (std::size_t i = 0; i < before.size(); ++i)
        CHECK(std::abs(rho.data()[i] - before[i]) < 1e-12);
    }
  }
}

TEST_CASE("simulate") {
  SUBCASE("empty circuit keeps the all-zeros state") {
    const Circuit c(3);
    const auto d = output_distribution(simulate(c, {0.2, 0.3, 0.0}), 0.0);
    CHECK(d.at(0) == doctest::Approx(1.0));
  }
  SUBCASE("noiseless X gives a deterministic 1") {
    Circuit c(1);
    c.append(Gate::x(0));
    const auto d = output_distribution(simulate(c, NoiseModel::none()), 0.0);
    CHECK(d.at(1) == doctest::Approx(1.0));
  }
  SUBCASE("X with eps1 = 0.1 gives {0: 0.05, 1: 0.95}") {
    Circuit c(1);
    c.append(Gate::x(0));
    const auto d = output_distribution(simulate(c, {0.1, 0.0, 0.0}), 0.0);
    CHECK(d.at(0) == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(d.at(1) == doctest::Approx(0.95).epsilon(1e-12));
  }
  SUBCASE("width above the maximum is rejected") {
    const Circuit c(5);
    SimOptions opts;
    opts.max_qubits = 4;
    CHECK_THROWS_AS(simulate(c, NoiseModel::none(), opts), std::invalid_argument);
  }
}

TEST_CASE("output_distribution") {
  SUBCASE("point mass with no readout error") {
    DensityMatrix rho(2);
    const auto d = output_distribution(rho, 0.0);
    CHECK(d.at(0) == doctest::Approx(1.0));
    CHECK(d.probs().size() == 1);
  }
  SUBCASE("uniform state is flip-invariant") {
    DensityMatrix rho(1);
    const std::array<int, 1> q0{0};
    rho = apply_depolarizing(std::move(rho), q0, 1.0);
    for (double flip : {0.0, 0.1, 0.5}) {
      const auto d = output_distribution(rho, flip);
      CHECK(d.at(0) == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(d.at(1) == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
  SUBCASE("independent per-bit flips on a 2-qubit point mass") {
    DensityMatrix rho(2);
    const auto d = output_distribution(rho, 0.02);
    CHECK(d.at(0b00) == doctest::Approx(0.9604).epsilon(1e-12));
    CHECK(d.at(0b01) == doctest::Approx(0.0196).epsilon(1e-12));
    CHECK(d.at(0b10) == doctest::Approx(0.0196).epsilon(1e-12));
    CHECK(d.at(0b11) == doctest::Approx(0.0004).epsilon(1e-12));
  }
}

TEST_CASE("exact_unitary") {
  SUBCASE("empty circuit is the identity") {
    const Circuit c(2);
    CHECK(exact_unitary(c).isIdentity(1e-14));
  }
  SUBCASE("[X] is Pauli X") {
    Circuit c(1);
    c.append(Gate::x(0));
    const auto u = exact_unitary(c);
    CHECK(std::abs(u(0, 1) - cd(1, 0)) < 1e-14);
    CHECK(std::abs(u(1, 0) - cd(1, 0)) < 1e-14);
    CHECK(std::abs(u(0, 0)) < 1e-14);
  }
  SUBCASE("[CNOT, CNOT] is the identity") {
    Circuit c(2);
    c.append(Gate::cnot(0, 1));
    c.append(Gate::cnot(0, 1));
    CHECK(exact_unitary(c).isIdentity(1e-14));
  }
  SUBCASE("width 7 rejected") {
    const Circuit c(7);
    CHECK_THROWS_AS(exact_unitary(c), std::invalid_argument);
  }
}

TEST_CASE("simulated states satisfy the channel invariants") {
  Rng rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = testing::uniform_int(rng, 1, 4);
    const Circuit c = testing::random_circuit(rng, std::max(n, 2), 12);
    const NoiseModel noise{testing::uniform(rng, 0.0, 0.08),
                           testing::uniform(rng, 0.0, 0.08), 0.0};
    const DensityMatrix rho = simulate(c, noise);
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rho.hermiticity_defect() < 1e-10);
    const Eigen::MatrixXcd m = to_eigen(rho);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    CHECK(es.eigenvalues().minCoeff() > -1e-8);
  }
}

TEST_CASE("noiseless simulation matches the exact unitary amplitudes") {
  Rng rng(5150);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = testing::uniform_int(rng, 2, 5);
    const Circuit c = testing::random_circuit(rng, n, 20);
    const DensityMatrix rho = simulate(c, NoiseModel::none());
    const Eigen::MatrixXcd u = exact_unitary(c);
    const auto diag = rho.diagonal_real();
    for (std::size_t z = 0; z < diag.size(); ++z) {
      const double amp2 = std::norm(u(Eigen::Index(z), 0));
      CHECK(diag[z] == doctest::Approx(amp2).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("openmp kernels match the serial reference bitwise") {
  Rng rng(99);
  for (int trial = 0; trial < 4; ++trial) {
    const int n = 8;  // big enough to cross the parallel threshold
    const Circuit c = testing::random_circuit(rng, n, 24);
    const NoiseModel noise{0.002, 0.015, 0.0};
    SimOptions serial_opts;
    serial_opts.backend = Backend::serial;
    SimOptions omp_opts;
    omp_opts.backend = Backend::openmp;
    const DensityMatrix a = simulate(c, noise, serial_opts);
    const DensityMatrix b = simulate(c, noise, omp_opts);
    REQUIRE(a.data().size() == b.data().size());
    bool identical = true;
    for (std::size_t i = 0; i < a.data().size(); ++i)
      if (a.data()[i] != b.data()[i]) {
        identical = false;
        break;
      }
    CHECK(identical);

    const Distribution da = output_distribution(a, 0.01, Backend::serial);
    const Distribution db = output_distribution(b, 0.01, Backend::openmp);
    CHECK(da.probs() == db.probs());
  }
}
