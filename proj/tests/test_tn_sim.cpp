#include "doctest.h"

#include <cmath>

#include "rtn/exact_oracle.hpp"
#include "rtn/graph_builders.hpp"
#include "rtn/rng.hpp"
#include "rtn/tn_sim.hpp"

using namespace rtn;

TEST_CASE("permute and contract agree with matrix algebra") {
  Rng rng(1, 0);
  const int d = 3;
  Tensor a{{10, 20}, std::vector<Complex>(9), d};
  Tensor b{{20, 30}, std::vector<Complex>(9), d};
  for (auto& x : a.data) x = rng.complex_normal();
  for (auto& x : b.data) x = rng.complex_normal();

  const Tensor c = contract(a, b);
  CHECK(c.labels == std::vector<int>{10, 30});
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      Complex want = 0;
      for (int j = 0; j < d; ++j) want += a.data[i * d + j] * b.data[j * d + k];
      CHECK(std::abs(c.data[i * d + k] - want) < 1e-12);
    }

  const Tensor t = permuted(a, {20, 10});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) CHECK(t.data[j * d + i] == a.data[i * d + j]);
  CHECK(permuted(t, {10, 20}).data == a.data);

  // Rank-3 permutation round trip.
  Tensor r{{1, 2, 3}, std::vector<Complex>(8), 2};
  for (std::size_t i = 0; i < 8; ++i) r.data[i] = static_cast<double>(i);
  const Tensor rp = permuted(r, {3, 1, 2});
  CHECK(rp.data[1 * 4 + 0 * 2 + 1] == r.data[0 * 4 + 1 * 2 + 1]);
  CHECK(permuted(rp, {1, 2, 3}).data == r.data);
}

TEST_CASE("single vertex state is a Gaussian matrix") {
  const Graph g = single_vertex();
  const auto s = sample_state(g, 4, 5);
  CHECK(s.legs == 2);
  CHECK(s.data.size() == 16);
  const auto again = sample_state(g, 4, 5);
  CHECK(s.data == again.data);
  CHECK(sample_state(g, 4, 6).data != s.data);

  Rng rng(5, 0);
  for (const auto& x : s.data) CHECK(x == rng.complex_normal());
}

TEST_CASE("two-vertex chain contracts one bond with a D^{-1/2} factor") {
  const int d = 2;
  const auto s = sample_state(series_chain(2), d, 9);
  Rng rng(9, 0);
  std::vector<Complex> t1(d * d), t2(d * d);  // legs (bond, half-edge)
  for (auto& x : t1) x = rng.complex_normal();
  for (auto& x : t2) x = rng.complex_normal();
  // Half-edges in canonical order: (v1, B) then (v2, A).
  for (int b = 0; b < d; ++b)
    for (int a = 0; a < d; ++a) {
      Complex want = 0;
      for (int e = 0; e < d; ++e) want += t1[e * d + b] * t2[e * d + a];
      want /= std::sqrt(static_cast<double>(d));
      CHECK(std::abs(s.data[b * d + a] - want) < 1e-12);
    }
}

TEST_CASE("spectrum") {
  const auto id = spectrum(Eigen::MatrixXcd::Identity(4, 4));
  CHECK(id == std::vector<double>{1, 1, 1, 1});

  Rng rng(2, 0);
  Eigen::MatrixXcd g(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = rng.complex_normal();
  const Eigen::MatrixXcd u = Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
  Eigen::MatrixXcd m = u * Eigen::Vector2cd(3, 1).asDiagonal() * u.adjoint();
  m = (m + m.adjoint()).eval() / 2.0;
  const auto ev = spectrum(m);
  CHECK(ev[0] == doctest::Approx(3).epsilon(1e-8));
  CHECK(ev[1] == doctest::Approx(1).epsilon(1e-8));

  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(spectrum(bad), std::invalid_argument);
}

TEST_CASE("reduced density shapes and rank") {
  const Graph all_a({"x"}, {}, {{"x", Region::A}, {"x", Region::A}});
  const auto rho = reduced_density(sample_state(all_a, 3, 1), all_a);
  CHECK(rho.rows() == 9);
  const auto ev = spectrum(rho);
  CHECK(ev[1] < 1e-10 * ev[0]);

  const Graph b = bottleneck();
  const auto r = empirical_report(b, 3, 4, 2, 7);
  CHECK(r.maxflow == 1);
  CHECK(r.rank_bound_holds);
  CHECK(r.worst_tail_ratio < 1e-10);
  CHECK(r.pooled_eigenvalues.size() == 4 * 3);
}

TEST_CASE("Wishart second moment at D = 64") {
  const auto r = empirical_report(single_vertex(), 64, 50, 2, 3);
  CHECK(std::abs(r.normalized_moments[1].mean - 2.0) / 2.0 < 0.05);
  CHECK(std::abs(r.page_gap.mean - 0.5) < 0.05);
  CHECK(std::abs(r.trace_tilde.mean - 1.0) < 3 * r.trace_tilde.std_error);
}

TEST_CASE("series chain normalized moments match the exact finite-D mean") {
  const int d = 32;
  const auto r = empirical_report(series_chain(2), d, 200, 2, 4);
  // D^{-F} D^{2(F - |E_bd|)} E Tr rho_A^2 with F = 1, |E_bd| = 2.
  const double want = moment_polynomial(series_chain(2), 2).evaluate(d) / std::pow(d, 3);
  CHECK(std::abs(want - 3.0) < 0.2);
  CHECK(std::abs(r.normalized_moments[1].mean - want) < 3 * r.normalized_moments[1].std_error);
}

TEST_CASE("contraction budget") {
  CHECK_THROWS_AS(sample_state(lattice(3, 3), 4, 0, 0, 1000), ContractionBudgetExceeded);
  CHECK_THROWS_AS(sample_state(single_vertex(), 1, 0), std::invalid_argument);
}

TEST_CASE("compensated summation and summaries") {
  CompensatedSum s;
  s.add(1e16);
  s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 1.0);
  const Summary m = summarize({1, 2, 3, 4});
  CHECK(m.mean == 2.5);
  CHECK(m.variance == doctest::Approx(5.0 / 3.0));
  CHECK(m.std_error == doctest::Approx(std::sqrt(5.0 / 12.0)));
}
