#include "doctest.h"

#include "rtn/graph_builders.hpp"
#include "rtn/moments.hpp"
#include "rtn/perm.hpp"

using namespace rtn;

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Perm({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<int>{}), std::invalid_argument);
  const Perm g = Perm::full_cycle(4);
  CHECK(g.image() == std::vector<int>{3, 0, 1, 2});
  CHECK(g.cycle_count() == 1);
  CHECK(g.length() == 3);
  CHECK(g * g.inverse() == Perm::identity(4));
  const Perm a({1, 0, 2});
  const Perm b({0, 2, 1});
  CHECK((a * b)[1] == a[b[1]]);
  CHECK_THROWS_AS(cayley_distance(a, Perm::identity(4)), std::invalid_argument);
}

TEST_CASE("Cayley distance is a metric on small groups") {
  for (int n = 1; n <= 4; ++n) {
    const SymmetricGroup sg(n);
    for (int i = 0; i < sg.size(); ++i) {
      CHECK(sg.distance(i, i) == 0);
      for (int j = 0; j < sg.size(); ++j) {
        CHECK(sg.distance(i, j) == sg.distance(j, i));
        CHECK(sg.distance(i, j) == cayley_distance(sg.element(i), sg.element(j)));
        if (i != j) CHECK(sg.distance(i, j) > 0);
        for (int k = 0; k < sg.size(); ++k) CHECK(sg.distance(i, k) <= sg.distance(i, j) + sg.distance(j, k));
      }
    }
  }
}

TEST_CASE("geodesic permutations are counted by Catalan numbers") {
  for (int n = 1; n <= 6; ++n) {
    const SymmetricGroup sg(n);
    int count = 0;
    for (int i = 0; i < sg.size(); ++i) {
      const bool geo = sg.to_identity(i) + sg.to_gamma(i) == n - 1;
      CHECK(geo == on_geodesic(sg.element(i)));
      count += geo;
    }
    CHECK(BigInt(count) == catalan(n));
  }
}

TEST_CASE("symmetric group tables") {
  const SymmetricGroup sg(3);
  CHECK(sg.size() == 6);
  CHECK(sg.element(0) == Perm::identity(3));
  CHECK(sg.element(sg.gamma_index()) == Perm::full_cycle(3));
  for (int i = 0; i < sg.size(); ++i) CHECK(sg.index_of(sg.element(i)) == i);
  CHECK_THROWS(SymmetricGroup(0));
  CHECK_THROWS(SymmetricGroup(8));
}

TEST_CASE("Hamiltonians on a single vertex") {
  const Graph g = single_vertex();
  const int n = 3;
  const Assignment id{{"x", Perm::identity(n)}};
  const Assignment gamma{{"x", Perm::full_cycle(n)}};
  CHECK(hamiltonian_H(g, id, n) == n - 1);
  CHECK(hamiltonian_H(g, gamma, n) == n - 1);
  CHECK(hamiltonian_h(g, id, n) == 0);
  CHECK(hamiltonian_h(g, gamma, n) == 2 * (n - 1));
  CHECK_THROWS_AS(hamiltonian_H(g, {}, n), std::invalid_argument);
  CHECK_THROWS_AS(hamiltonian_H(g, id, 2), std::invalid_argument);
}

TEST_CASE("bulk terms count edge multiplicity") {
  const Graph g({"a", "b"}, {{"a", "b"}, {"a", "b"}}, {});
  const int n = 2;
  const Assignment s{{"a", Perm::identity(n)}, {"b", Perm::full_cycle(n)}};
  CHECK(hamiltonian_H(g, s, n) == 2);
}
