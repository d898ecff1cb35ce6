// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qemdist/estimator.hpp"
#include "qemdist/sampling.hpp"
#include "test_helpers.hpp"

using namespace qem;

namespace {

Distribution dist1(double p0) {
  return Distribution(1, {{0, p0}, {1, 1.0 - p0}});
}

// Brute-force enumeration oracle for the MC estimator: sums the per-round
// contribution Gamma * sgn(c_k) over all (k, z) pairs weighted by
// p_k * p_z^(k). Independent of the mc_estimate code path.
std::map<std::uint64_t, double> enumerate_mc_expectation(
    const LinearAnsatz& ansatz, const std::vector<Distribution>& dists) {
  double gamma = 0.0;
  for (const auto& t : ansatz.terms) gamma += std::abs(t.coefficient);
  std::map<std::uint64_t, double> expect;
  for (std::size_t k = 0; k < dists.size(); ++k) {
    const double pk = std::abs(ansatz.terms[k].coefficient) / gamma;
    const double sgn = ansatz.terms[k].coefficient >= 0.0 ? 1.0 : -1.0;
    for (const auto& [z, p] : dists[k].probs())
      expect[z] += gamma * pk * sgn * p;
  }
  return expect;
}

// Enumerated per-round second moment, for the variance bound.
double enumerate_mc_total_variance(const LinearAnsatz& ansatz,
                                   const std::vector<Distribution>& dists,
                                   double n_meas) {
  double gamma = 0.0;
  for (const auto& t : ansatz.terms) gamma += std::abs(t.coefficient);
  const auto expect = enumerate_mc_expectation(ansatz, dists);
  double total = 0.0;
  std::map<std::uint64_t, double> second;
  for (std::size_t k = 0; k < dists.size(); ++k) {
    const double pk = std::abs(ansatz.terms[k].coefficient) / gamma;
    for (const auto& [z, p] : dists[k].probs())
      second[z] += gamma * gamma * pk * p;  // (Gamma * sgn)^2 = Gamma^2
  }
  for (const auto& [z, m2] : second) {
    const double mean = expect.count(z) ? expect.at(z) : 0.0;
    total += (m2 - mean * mean) / n_meas;
  }
  return total;
}

}  // namespace

TEST_CASE("sample_counts") {
  SUBCASE("point mass") {
    const Counts c = sample_counts(Distribution::point_mass(1, 0), 100, 42);
    CHECK(c.counts.at(0) == 100);
    CHECK(c.total == 100);
  }
  SUBCASE("zero shots") {
    const Counts c = sample_counts(dist1(0.5), 0, 42);
    CHECK(c.counts.empty());
    CHECK(c.total == 0);
  }
  SUBCASE("binomial concentration at a million shots") {
    const Counts c = sample_counts(dist1(0.5), 1000000, 4711);
    const double dev = std::abs(double(c.counts.at(0)) - 500000.0);
    CHECK(dev < 5.0 * 500.0);
  }
  SUBCASE("same seed, same counts") {
    Rng rng(3);
    const Distribution d = testing::random_distribution(rng, 3);
    const Counts a = sample_counts(d, 5000, 1234);
    const Counts b = sample_counts(d, 5000, 1234);
    CHECK(a.counts == b.counts);
    const Counts c = sample_counts(d, 5000, 1235);
    CHECK(a.counts != c.counts);
  }
}

TEST_CASE("empirical_distribution") {
  SUBCASE("simple ratios") {
    Counts c;
    c.n_bits = 1;
    c.counts = {{0, 3}, {1, 1}};
    c.total = 4;
    const Distribution d = empirical_distribution(c);
    CHECK(d.at(0) == doctest::Approx(0.75));
    CHECK(d.at(1) == doctest::Approx(0.25));
  }
  SUBCASE("single outcome") {
    Counts c;
    c.n_bits = 2;
    c.counts = {{2, 17}};
    c.total = 17;
    CHECK(empirical_distribution(c).at(2) == doctest::Approx(1.0));
  }
  SUBCASE("zero shots rejected") {
    Counts c;
    c.n_bits = 1;
    CHECK_THROWS_AS(empirical_distribution(c), std::invalid_argument);
  }
  SUBCASE("round trip concentrates at ten million shots") {
    const Distribution d(3, {{0, 0.4}, {3, 0.35}, {5, 0.2}, {7, 0.05}});
    const Distribution back =
        empirical_distribution(sample_counts(d, 10000000, 8));
    double acc = 0.0;
    for (int z = 0; z < 8; ++z) acc += std::abs(d.at(z) - back.at(z));
    CHECK(acc / 2.0 < 0.002);
  }
}

TEST_CASE("mc_estimate") {
  SUBCASE("single-term ansatz is plain sampling") {
    LinearAnsatz a;
    a.terms.push_back({1.0, dist1(0.7)});
    const McResult r = mc_estimate(a, 20000, 99);
    CHECK(r.gamma == doctest::Approx(1.0));
    double sum = 0.0;
    for (const auto& [z, v] : r.quasi.values) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.quasi.at(0) == doctest::Approx(0.7).epsilon(0.05));
  }
  SUBCASE("linear-extrapolation coefficients give Gamma = 2") {
    LinearAnsatz a;
    a.terms.push_back({1.5, dist1(0.8)});
    a.terms.push_back({-0.5, dist1(0.6)});
    CHECK(a.gamma() == doctest::Approx(2.0));
    const McResult r = mc_estimate(a, 100000, 7);
    // Oracle: E[p_0] = 1.5*0.8 - 0.5*0.6 = 0.9, tolerance 5*Gamma/sqrt(N).
    CHECK(std::abs(r.quasi.at(0) - 0.9) < 5.0 * 2.0 / std::sqrt(100000.0));
  }
  SUBCASE("deterministic given the seed") {
    LinearAnsatz a;
    a.terms.push_back({1.5, dist1(0.8)});
    a.terms.push_back({-0.5, dist1(0.6)});
    const McResult r1 = mc_estimate(a, 1000, 31337);
    const McResult r2 = mc_estimate(a, 1000, 31337);
    CHECK(r1.quasi.values == r2.quasi.values);
  }
}

TEST_CASE("mc estimator is unbiased and within the variance bound") {
  Rng rng(271828);
  for (int trial = 0; trial < 50; ++trial) {
    LinearAnsatz a;
    const int n_terms = testing::uniform_int(rng, 1, 4);
    std::vector<Distribution> dists;
    for (int k = 0; k < n_terms; ++k) {
      double c = testing::uniform(rng, -2.0, 2.0);
      if (std::abs(c) < 0.05) c = 0.05;
      const Distribution d = testing::random_distribution(rng, 2);
      dists.push_back(d);
      a.terms.push_back({c, d});
    }
    const auto expect = enumerate_mc_expectation(a, dists);
    const QuasiDistribution exact = combine_exact(a);
    for (const auto& [z, v] : expect)
      CHECK(std::abs(v - exact.at(z)) < 1e-13);

    const double n_meas = 5000.0;
    double gamma = a.gamma();
    const double total_var = enumerate_mc_total_variance(a, dists, n_meas);
    CHECK(total_var <= gamma * gamma / n_meas + 1e-12);
  }
}

TEST_CASE("direct_estimate") {
  SUBCASE("single term reproduces the empirical distribution") {
    LinearAnsatz a;
    a.terms.push_back({1.0, dist1(0.65)});
    ShotPlan plan{{4000}};
    const QuasiDistribution q = direct_estimate(a, plan, 5);
    double sum = 0.0;
    for (const auto& [z, v] : q.values) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("exact limit equals the linear combination") {
    LinearAnsatz a;
    a.terms.push_back({1.5, dist1(0.8)});
    a.terms.push_back({-0.5, dist1(0.6)});
    const QuasiDistribution q = combine_exact(a);
    CHECK(q.at(0) == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(q.at(1) == doctest::Approx(0.1).epsilon(1e-13));
  }
  SUBCASE("plan length mismatch rejected") {
    LinearAnsatz a;
    a.terms.push_back({1.0, dist1(0.5)});
    ShotPlan plan{{100, 100}};
    CHECK_THROWS_AS(direct_estimate(a, plan, 1), std::invalid_argument);
  }
}

TEST_CASE("variance_direct") {
  SUBCASE("point-mass sources have zero variance") {
    LinearAnsatz a;
    a.terms.push_back({1.5, Distribution::point_mass(1, 0)});
    std::vector<Distribution> dists{Distribution::point_mass(1, 0)};
    const DirectVariance v = variance_direct(a, ShotPlan{{100}}, dists);
    CHECK(v.total == doctest::Approx(0.0));
    CHECK(v.bound == doctest::Approx(0.0225));
  }
  SUBCASE("uniform single term formula") {
    LinearAnsatz a;
    a.terms.push_back({1.0, dist1(0.5)});
    std::vector<Distribution> dists{dist1(0.5)};
    const DirectVariance v = variance_direct(a, ShotPlan{{100}}, dists);
    CHECK(v.per_bin.at(0) == doctest::Approx(0.0025).epsilon(1e-12));
    CHECK(v.per_bin.at(1) == doctest::Approx(0.0025).epsilon(1e-12));
    CHECK(v.total == doctest::Approx(0.005).epsilon(1e-12));
    CHECK(v.bound == doctest::Approx(0.01).epsilon(1e-12));
  }
  SUBCASE("total never exceeds the bound") {
    Rng rng(616);
    for (int trial = 0; trial < 100; ++trial) {
      LinearAnsatz a;
      std::vector<Distribution> dists;
      ShotPlan plan;
      const int n_terms = testing::uniform_int(rng, 1, 4);
      for (int k = 0; k < n_terms; ++k) {
        double c = testing::uniform(rng, -2.0, 2.0);
        if (std::abs(c) < 0.05) c = 0.05;
        const Distribution d = testing::random_distribution(rng, 2);
        a.terms.push_back({c, d});
        dists.push_back(d);
        plan.allocations.push_back(std::uint64_t(testing::uniform_int(rng, 10, 500)));
      }
      const DirectVariance v = variance_direct(a, plan, dists);
      CHECK(v.total <= v.bound + 1e-15);
    }
  }
}

TEST_CASE("optimal_shot_allocation") {
  SUBCASE("single term takes everything") {
    LinearAnsatz a;
    a.terms.push_back({0.7, dist1(0.5)});
    const ShotPlan plan = optimal_shot_allocation(a, 1234);
    CHECK(plan.allocations == std::vector<std::uint64_t>{1234});
  }
  SUBCASE("3/2, -1/2 splits 5000 as 3750/1250 and matches Gamma^2/N") {
    LinearAnsatz a;
    a.terms.push_back({1.5, dist1(0.8)});
    a.terms.push_back({-0.5, dist1(0.6)});
    const ShotPlan plan = optimal_shot_allocation(a, 5000);
    REQUIRE(plan.allocations == std::vector<std::uint64_t>{3750, 1250});
    const double bound = 1.5 * 1.5 / 3750.0 + 0.5 * 0.5 / 1250.0;
    CHECK(std::abs(bound - 8e-4) < 1e-16);
    CHECK(std::abs(bound - 4.0 / 5000.0) < 1e-16);
  }
  SUBCASE("equal magnitudes split evenly") {
    LinearAnsatz a;
    a.terms.push_back({1.0, dist1(0.5)});
    a.terms.push_back({-1.0, dist1(0.5)});
    a.terms.push_back({1.0, dist1(0.5)});
    const ShotPlan plan = optimal_shot_allocation(a, 1000);
    CHECK(plan.total() == 1000);
    for (auto n : plan.allocations) CHECK(std::abs(double(n) - 1000.0 / 3.0) <= 1.0);
  }
  SUBCASE("too few shots rejected") {
    LinearAnsatz a;
    a.terms.push_back({1.0, dist1(0.5)});
    a.terms.push_back({-1.0, dist1(0.5)});
    CHECK_THROWS_AS(optimal_shot_allocation(a, 1), std::invalid_argument);
  }
  SUBCASE("optimal plan dominates random plans") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      LinearAnsatz a;
      const int n_terms = testing::uniform_int(rng, 2, 4);
      for (int k = 0; k < n_terms; ++k) {
        double c = testing::uniform(rng, 0.2, 2.0);
        if (rng.uniform01() < 0.5) c = -c;
        a.terms.push_back({c, dist1(0.5)});
      }
      const std::uint64_t total = 1000;
      const ShotPlan opt = optimal_shot_allocation(a, total);
      // A random competitor plan with every allocation >= 2.
      ShotPlan other;
      std::uint64_t used = 0;
      for (int k = 0; k < n_terms - 1; ++k) {
        const std::uint64_t n = std::uint64_t(
            testing::uniform_int(rng, 2, int(total) / n_terms));
        other.allocations.push_back(n);
        used += n;
      }
      other.allocations.push_back(total - used);
      auto bound = [&](const ShotPlan& plan) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.terms.size(); ++k)
          s += a.terms[k].coefficient * a.terms[k].coefficient /
               double(plan.allocations[k]);
        return s;
      };
      double slack = 0.0;
      for (std::size_t k = 0; k < a.terms.size(); ++k) {
        const double c2 = a.terms[k].coefficient * a.terms[k].coefficient;
        const double n = double(opt.allocations[k]);
        slack += c2 * (1.0 / (n - 1.0) - 1.0 / n);
      }
      CHECK(bound(opt) <= bound(other) + slack);
    }
  }
}
