#include "rtn/exact_oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "rtn/flow.hpp"
#include "rtn/perm.hpp"

namespace rtn {

BudgetExceeded::BudgetExceeded(double required, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + std::to_string(static_cast<long double>(required)) +
                         " assignments, budget is " + std::to_string(budget)),
      required_(required) {}

std::uint64_t MomentPolynomial::total() const {
  std::uint64_t t = 0;
  for (const auto& [h, c] : histogram) t += c;
  return t;
}

double MomentPolynomial::evaluate(double dimension) const {
  double v = 0;
  for (const auto& [h, c] : histogram)
    v += static_cast<double>(c) * std::pow(dimension, exponent_offset - h);
  return v;
}

namespace {

MomentPolynomial enumerate(const Graph& g, int n, bool all_b, std::uint64_t budget) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumeration supports 1 <= n <= 7");
  const int nv = static_cast<int>(g.vertex_count());

  double fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  const double required = std::pow(fact, nv);
  if (required > static_cast<double>(budget)) throw BudgetExceeded(required, budget);

  const SymmetricGroup sg(n);
  const int q = sg.size();

  std::vector<int> n_a(nv, 0), n_b(nv, 0);
  for (const auto& h : g.half_edges()) {
    const auto v = g.index_of(h.vertex);
    (all_b || h.region == Region::B ? n_b : n_a)[v]++;
  }
  // field[v * q + i]: boundary energy of vertex v in state i.
  std::vector<int> field(static_cast<std::size_t>(nv) * q);
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < q; ++i) field[v * q + i] = n_a[v] * sg.to_gamma(i) + n_b[v] * sg.to_identity(i);

  std::vector<std::vector<std::pair<int, int>>> nbrs(nv);  // (neighbour, multiplicity)
  for (const auto& e : g.bulk_edges()) {
    const int u = static_cast<int>(g.index_of(e.u));
    const int w = static_cast<int>(g.index_of(e.v));
    if (u == w) continue;
    auto bump = [&](int a, int b) {
      for (auto& [x, m] : nbrs[a])
        if (x == b) return void(++m);
      nbrs[a].emplace_back(b, 1);
    };
    bump(u, w);
    bump(w, u);
  }

  MomentPolynomial poly;
  poly.n = n;
  poly.exponent_offset = n * static_cast<int>(g.boundary_count());

  std::vector<int> state(nv, 0);
  int energy = 0;
  for (int v = 0; v < nv; ++v) energy += field[v * q];
  std::vector<std::uint64_t> hist(1, 0);
  auto record = [&] {
    if (energy >= static_cast<int>(hist.size())) hist.resize(energy + 1, 0);
    ++hist[energy];
  };
  auto move = [&](int v, int to) {
    const int from = state[v];
    energy += field[v * q + to] - field[v * q + from];
    for (const auto& [w, m] : nbrs[v]) energy += m * (sg.distance(to, state[w]) - sg.distance(from, state[w]));
    state[v] = to;
  };

  record();
  for (;;) {
    int v = 0;
    while (v < nv && state[v] == q - 1) {
      move(v, 0);
      ++v;
    }
    if (v == nv) break;
    move(v, state[v] + 1);
    record();
  }

  for (std::size_t h = 0; h < hist.size(); ++h)
    if (hist[h]) poly.histogram[static_cast<int>(h)] = hist[h];
  return poly;
}

}  // namespace

MomentPolynomial moment_polynomial(const Graph& g, int n, std::uint64_t budget) {
  return enumerate(g, n, false, budget);
}

MomentPolynomial normalization_polynomial(const Graph& g, int n, std::uint64_t budget) {
  return enumerate(g, n, true, budget);
}

std::uint64_t limit_moment(const Graph& g, int n, std::uint64_t budget) {
  const MomentPolynomial p = moment_polynomial(g, n, budget);
  const int expected = min_hamiltonian(g, n);
  if (p.min_key() != expected)
    throw std::logic_error("Hamiltonian minimum " + std::to_string(p.min_key()) +
                           " differs from (n-1)*maxflow = " + std::to_string(expected));
  return p.count_at_min();
}

int min_H_bruteforce(const Graph& g, int n, std::uint64_t budget) {
  return moment_polynomial(g, n, budget).min_key();
}

}  // namespace rtn
