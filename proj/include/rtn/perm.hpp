#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rtn/graph.hpp"

namespace rtn {

/// Permutation of {0..n-1} in one-line notation (image[i] = p(i)).
class Perm {
 public:
  /// Throws std::invalid_argument unless `image` is a bijection, n >= 1.
  explicit Perm(std::vector<int> image);

  static Perm identity(int n);
  /// gamma = (n n-1 ... 2 1): i -> i-1 for i > 1 and 1 -> n (1-based).
  static Perm full_cycle(int n);

  int order() const { return static_cast<int>(image_.size()); }
  int operator[](int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  Perm inverse() const;
  /// (a * b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);

  int cycle_count() const;
  /// Cayley length |p| = n - #cycles(p).
  int length() const { return order() - cycle_count(); }

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> image_;
};

/// n - #(a^{-1} b). Throws std::invalid_argument on order mismatch.
int cayley_distance(const Perm& a, const Perm& b);

/// |a| + |a^{-1} gamma| == n - 1.
bool on_geodesic(const Perm& a);

using Assignment = std::map<std::string, Perm>;

/// Spin-system energy: A half-edges pay |gamma^{-1} a_x|, B half-edges
/// |a_x|, bulk edges |a_x^{-1} a_y|, with multiplicity.
/// Throws std::invalid_argument if `s` misses a vertex or has the wrong order.
int hamiltonian_H(const Graph& g, const Assignment& s, int n);

/// As hamiltonian_H with every half-edge treated as a B half-edge.
int hamiltonian_h(const Graph& g, const Assignment& s, int n);

/// Dense tables over S_n for enumeration: elements in lexicographic order
/// (index 0 is the identity), pairwise Cayley distances and distances to
/// id and gamma.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n);

  int degree() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Perm& element(int i) const { return elements_[i]; }
  int index_of(const Perm& p) const;
  int gamma_index() const { return gamma_; }

  int distance(int i, int j) const { return dist_[i * size() + j]; }
  int to_identity(int i) const { return distance(0, i); }
  int to_gamma(int i) const { return distance(gamma_, i); }

 private:
  int n_;
  int gamma_;
  std::vector<Perm> elements_;
  std::vector<std::uint8_t> dist_;
};

}  // namespace rtn
