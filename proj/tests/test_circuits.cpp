// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <complex>

#include "qemdist/folding.hpp"
#include "qemdist/select.hpp"
#include "qemdist/simulator.hpp"
#include "qemdist/trotter.hpp"
#include "qemdist/unitary.hpp"
#include "test_helpers.hpp"

using namespace qem;

TEST_CASE("trotter circuit structure") {
  SUBCASE("3 qubits, 1 step: 3 RX + 2 ZZ blocks = 9 gates") {
    TFIParams p;
    p.n_qubits = 3;
    p.trotter_steps = 1;
    const Circuit c = build_trotter_tfi(p);
    CHECK(c.size() == 9);
    int rx = 0, rz = 0, cx = 0;
    for (const auto& g : c.gates) {
      if (g.kind == GateKind::RX) ++rx;
      if (g.kind == GateKind::RZ) ++rz;
      if (g.kind == GateKind::CNOT) ++cx;
    }
    CHECK(rx == 3);
    CHECK(rz == 2);
    CHECK(cx == 4);
  }
  SUBCASE("M scales the gate count linearly") {
    TFIParams p;
    p.n_qubits = 4;
    p.trotter_steps = 7;
    CHECK(build_trotter_tfi(p).size() == 7 * (4 + 3 * 3));
  }
  SUBCASE("periodic boundary adds one coupling per step") {
    TFIParams p;
    p.n_qubits = 4;
    p.trotter_steps = 2;
    CHECK(build_trotter_tfi(p, Boundary::periodic).size() ==
          build_trotter_tfi(p, Boundary::open).size() + 2 * 3);
  }
  SUBCASE("M = 0 is rejected") {
    TFIParams p;
    p.trotter_steps = 0;
    CHECK_THROWS_AS(build_trotter_tfi(p), std::invalid_argument);
  }
  SUBCASE("zero Hamiltonian leaves the all-zeros state") {
    TFIParams p;
    p.n_qubits = 3;
    p.coupling = 0.0;
    p.field = 0.0;
    p.trotter_steps = 2;
    const auto d =
        output_distribution(simulate(build_trotter_tfi(p), NoiseModel::none()), 0.0);
    CHECK(d.at(0) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("gate folding") {
  SUBCASE("lambda = 1 leaves the circuit unchanged") {
    Rng rng(7);
    const Circuit c = testing::random_circuit(rng, 3, 10);
    const Circuit f = fold_circuit(c, ScaleFactor(1));
    CHECK(f.size() == c.size());
  }
  SUBCASE("even lambda rejected") {
    CHECK_THROWS_AS(ScaleFactor(2), std::invalid_argument);
    CHECK_THROWS_AS(ScaleFactor(0), std::invalid_argument);
  }
  SUBCASE("[X] folds to [X, X, X]") {
    Circuit c(1);
    c.append(Gate::x(0));
    const Circuit f = fold_circuit(c, ScaleFactor(3));
    REQUIRE(f.size() == 3);
    for (const auto& g : f.gates) {
      CHECK(g.kind == GateKind::X);
      CHECK(!g.inverse);
    }
  }
  SUBCASE("noiseless folded output matches the unfolded one") {
    Rng rng(11);
    const Circuit c = testing::random_circuit(rng, 3, 12);
    const auto base =
        output_distribution(simulate(c, NoiseModel::none()), 0.0);
    const auto folded = output_distribution(
        simulate(fold_circuit(c, ScaleFactor(3)), NoiseModel::none()), 0.0);
    CHECK(tvd(base, folded) < 1e-10);
  }
  SUBCASE("folding preserves the exact unitary") {
    Rng rng(13);
    for (int trial = 0; trial < 8; ++trial) {
      const int n = testing::uniform_int(rng, 2, 4);
      const Circuit c = testing::random_circuit(rng, n, 10);
      const Eigen::MatrixXcd u = exact_unitary(c);
      for (int lambda : {1, 3, 5}) {
        const Eigen::MatrixXcd uf = exact_unitary(fold_circuit(c, ScaleFactor(lambda)));
        CHECK((u - uf).operatorNorm() < 1e-10);
      }
    }
  }
}

TEST_CASE("folded single-qubit noise law matches a hand-composed channel") {
  // One RX gate, depolarizing eps after every physical gate, lambda = 3:
  // the folded circuit must equal D . U . D . U^dag . D . U applied by hand.
  const double eps = 0.05;
  const Gate g = Gate::rx(0, 0.7);
  Circuit c(1);
  c.append(g);

  using M2 = std::array<cd, 4>;
  auto conj2 = [](const M2& u, const M2& rho) {
    M2 ur{u[0] * rho[0] + u[1] * rho[2], u[0] * rho[1] + u[1] * rho[3],
          u[2] * rho[0] + u[3] * rho[2], u[2] * rho[1] + u[3] * rho[3]};
    return M2{ur[0] * std::conj(u[0]) + ur[1] * std::conj(u[1]),
              ur[0] * std::conj(u[2]) + ur[1] * std::conj(u[3]),
              ur[2] * std::conj(u[0]) + ur[3] * std::conj(u[1]),
              ur[2] * std::conj(u[2]) + ur[3] * std::conj(u[3])};
  };
  auto depol = [&](const M2& rho) {
    const cd tr = rho[0] + rho[3];
    return M2{(1 - eps) * rho[0] + eps * 0.5 * tr, (1 - eps) * rho[1],
              (1 - eps) * rho[2], (1 - eps) * rho[3] + eps * 0.5 * tr};
  };
  const M2 u = gate_matrix_1q(g);
  const M2 udg = gate_matrix_1q(g.inverted());
  M2 rho{cd(1, 0), cd(0, 0), cd(0, 0), cd(0, 0)};
  rho = depol(conj2(u, rho));
  rho = depol(conj2(udg, rho));
  rho = depol(conj2(u, rho));

  const DensityMatrix sim =
      simulate(fold_circuit(c, ScaleFactor(3)), {eps, 0.0, 0.0});
  CHECK(std::abs(sim.at(0, 0) - rho[0]) < 1e-14);
  CHECK(std::abs(sim.at(0, 1) - rho[1]) < 1e-14);
  CHECK(std::abs(sim.at(1, 0) - rho[2]) < 1e-14);
  CHECK(std::abs(sim.at(1, 1) - rho[3]) < 1e-14);
}

TEST_CASE("trotter defect") {
  SUBCASE("zero Hamiltonian has zero defect") {
    TFIParams p;
    p.n_qubits = 3;
    p.coupling = 0.0;
    p.field = 0.0;
    CHECK(trotter_defect(p) < 1e-10);
  }
  SUBCASE("commuting limits are exact") {
    TFIParams p;
    p.n_qubits = 3;
    p.coupling = 1.3;
    p.field = 0.0;
    CHECK(trotter_defect(p) < 1e-10);
    p.coupling = 0.0;
    p.field = 0.9;
    CHECK(trotter_defect(p) < 1e-10);
  }
  SUBCASE("error shrinks with the step count") {
    TFIParams p;
    p.n_qubits = 3;
    p.trotter_steps = 10;
    const double d10 = trotter_defect(p);
    p.trotter_steps = 20;
    const double d20 = trotter_defect(p);
    CHECK(d20 < d10);
  }
  SUBCASE("monotone non-increasing over doubling steps") {
    TFIParams p;
    p.n_qubits = 3;
    double prev = 1e300;
    for (int m : {1, 2, 4, 8, 16, 32}) {
      p.trotter_steps = m;
      const double d = trotter_defect(p);
      CHECK(d <= prev + 1e-12);
      prev = d;
    }
  }
  SUBCASE("first-order scaling: halving rate near 2") {
    TFIParams p;
    p.n_qubits = 3;
    p.trotter_steps = 32;
    const double d32 = trotter_defect(p);
    p.trotter_steps = 64;
    const double d64 = trotter_defect(p);
    CHECK(d32 / d64 > 1.5);
    CHECK(d32 / d64 < 2.5);
  }
}
