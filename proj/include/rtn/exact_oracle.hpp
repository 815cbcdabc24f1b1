#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "rtn/graph.hpp"

namespace rtn {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 200'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(double required, std::uint64_t budget);
  /// (n!)^{|V|}, as a double because it can overflow 64 bits.
  double required() const noexcept { return required_; }

 private:
  double required_;
};

/// sum_h count(h) * D^{exponent_offset - h}.
struct MomentPolynomial {
  int n = 1;
  int exponent_offset = 0;  // n |E_boundary|
  std::map<int, std::uint64_t> histogram;

  int min_key() const { return histogram.begin()->first; }
  std::uint64_t count_at_min() const { return histogram.begin()->second; }
  std::uint64_t total() const;
  double evaluate(double dimension) const;
};

/// Histogram of the network Hamiltonian over all of S_n^{|V|}.
MomentPolynomial moment_polynomial(const Graph& g, int n,
                                   std::uint64_t budget = kDefaultEnumerationBudget);
/// Same with every half-edge treated as a B half-edge.
MomentPolynomial normalization_polynomial(const Graph& g, int n,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

/// Number of assignments at the Hamiltonian minimum. Throws std::logic_error
/// if that minimum differs from (n-1) * maxflow.
std::uint64_t limit_moment(const Graph& g, int n, std::uint64_t budget = kDefaultEnumerationBudget);

int min_H_bruteforce(const Graph& g, int n, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace rtn
