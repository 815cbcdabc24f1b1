#include "rtn/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rtn {

Perm::Perm(std::vector<int> image) : image_(std::move(image)) {
  const int n = order();
  if (n < 1) throw std::invalid_argument("permutation order must be >= 1");
  std::vector<char> hit(n, 0);
  for (int x : image_) {
    if (x < 0 || x >= n || hit[x]) throw std::invalid_argument("image is not a bijection");
    hit[x] = 1;
  }
}

Perm Perm::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation order must be >= 1");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::full_cycle(int n) {
  if (n < 1) throw std::invalid_argument("permutation order must be >= 1");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + n - 1) % n;
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < order(); ++i) inv[image_[i]] = i;
  return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.order() != b.order()) throw std::invalid_argument("permutation order mismatch");
  std::vector<int> img(a.order());
  for (int i = 0; i < a.order(); ++i) img[i] = a[b[i]];
  return Perm(std::move(img));
}

int Perm::cycle_count() const {
  std::vector<char> seen(image_.size(), 0);
  int cycles = 0;
  for (int i = 0; i < order(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = image_[j]) seen[j] = 1;
  }
  return cycles;
}

int cayley_distance(const Perm& a, const Perm& b) {
  if (a.order() != b.order()) throw std::invalid_argument("permutation order mismatch");
  return (a.inverse() * b).length();
}

bool on_geodesic(const Perm& a) {
  const int n = a.order();
  return a.length() + cayley_distance(a, Perm::full_cycle(n)) == n - 1;
}

namespace {

const Perm& lookup(const Assignment& s, const std::string& v, int n) {
  auto it = s.find(v);
  if (it == s.end()) throw std::invalid_argument("assignment misses vertex '" + v + "'");
  if (it->second.order() != n)
    throw std::invalid_argument("assignment for '" + v + "' has wrong order");
  return it->second;
}

int energy(const Graph& g, const Assignment& s, int n, bool use_regions) {
  if (s.size() != g.vertex_count())
    throw std::invalid_argument("assignment domain differs from the vertex set");
  const Perm id = Perm::identity(n);
  const Perm gamma = Perm::full_cycle(n);
  int total = 0;
  for (const auto& h : g.half_edges()) {
    const Perm& p = lookup(s, h.vertex, n);
    const bool to_gamma = use_regions && h.region == Region::A;
    total += cayley_distance(to_gamma ? gamma : id, p);
  }
  for (const auto& e : g.bulk_edges())
    total += cayley_distance(lookup(s, e.u, n), lookup(s, e.v, n));
  return total;
}

}  // namespace

int hamiltonian_H(const Graph& g, const Assignment& s, int n) { return energy(g, s, n, true); }

int hamiltonian_h(const Graph& g, const Assignment& s, int n) { return energy(g, s, n, false); }

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1 || n > 7) throw std::invalid_argument("SymmetricGroup supports 1 <= n <= 7");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    elements_.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));

  const int m = size();
  std::vector<Perm> inverses;
  inverses.reserve(m);
  for (const auto& p : elements_) inverses.push_back(p.inverse());
  dist_.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      dist_[i * m + j] = static_cast<std::uint8_t>((inverses[i] * elements_[j]).length());
  gamma_ = index_of(Perm::full_cycle(n));
}

int SymmetricGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw std::invalid_argument("permutation not in group");
  return static_cast<int>(it - elements_.begin());
}

}  // namespace rtn
