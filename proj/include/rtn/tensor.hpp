#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rtn {

using Complex = std::complex<double>;

/// Dense tensor whose legs all have the same dimension. Legs carry integer
/// labels; storage is row-major with the first leg most significant.
struct Tensor {
  std::vector<int> labels;
  std::vector<Complex> data;
  int dim = 2;

  std::size_t rank() const { return labels.size(); }
};

class ContractionBudgetExceeded : public std::runtime_error {
 public:
  ContractionBudgetExceeded(double largest, std::uint64_t budget);
  double largest() const noexcept { return largest_; }

 private:
  double largest_;
};

/// dim^rank as a double, so oversized shapes can be detected without overflow.
double tensor_size(int dim, std::size_t rank);

/// Reorders legs so that labels() == order (a permutation of the labels).
Tensor permuted(const Tensor& t, const std::vector<int>& order);

/// Sums over all labels the two tensors share. Result legs are a's free legs
/// followed by b's, each in their original order.
Tensor contract(const Tensor& a, const Tensor& b);

/// Contracts a network pairwise, always picking the connected pair whose
/// result is smallest (ties broken by position). Throws
/// ContractionBudgetExceeded if an intermediate would exceed `budget`
/// entries.
Tensor contract_network(std::vector<Tensor> tensors, std::uint64_t budget);

}  // namespace rtn
