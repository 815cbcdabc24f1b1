#include "rtn/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

namespace rtn {

ContractionBudgetExceeded::ContractionBudgetExceeded(double largest, std::uint64_t budget)
    : std::runtime_error("tensor contraction needs an intermediate of " +
                         std::to_string(static_cast<long double>(largest)) + " entries, budget is " +
                         std::to_string(budget)),
      largest_(largest) {}

double tensor_size(int dim, std::size_t rank) { return std::pow(static_cast<double>(dim), rank); }

Tensor permuted(const Tensor& t, const std::vector<int>& order) {
  const std::size_t r = t.rank();
  if (order.size() != r) throw std::invalid_argument("permuted: label count mismatch");
  if (order == t.labels) return t;
  // src_axis[k]: position in t of the k-th output leg.
  std::vector<std::size_t> src_axis(r);
  for (std::size_t k = 0; k < r; ++k) {
    auto it = std::find(t.labels.begin(), t.labels.end(), order[k]);
    if (it == t.labels.end()) throw std::invalid_argument("permuted: unknown label");
    src_axis[k] = static_cast<std::size_t>(it - t.labels.begin());
  }
  std::vector<std::size_t> src_stride(r);
  std::size_t s = 1;
  for (std::size_t k = r; k-- > 0;) {
    src_stride[k] = s;
    s *= static_cast<std::size_t>(t.dim);
  }
  std::vector<std::size_t> stride(r);
  for (std::size_t k = 0; k < r; ++k) stride[k] = src_stride[src_axis[k]];

  Tensor out{order, std::vector<Complex>(t.data.size()), t.dim};
  std::vector<int> idx(r, 0);
  std::size_t src = 0;
  for (std::size_t dst = 0; dst < out.data.size(); ++dst) {
    out.data[dst] = t.data[src];
    for (std::size_t k = r; k-- > 0;) {
      if (++idx[k] < t.dim) {
        src += stride[k];
        break;
      }
      idx[k] = 0;
      src -= stride[k] * static_cast<std::size_t>(t.dim - 1);
    }
  }
  return out;
}

Tensor contract(const Tensor& a, const Tensor& b) {
  if (a.dim != b.dim) throw std::invalid_argument("contract: leg dimensions differ");
  std::vector<int> shared, free_a, free_b;
  for (int l : a.labels)
    (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end() ? shared : free_a).push_back(l);
  for (int l : b.labels)
    if (std::find(shared.begin(), shared.end(), l) == shared.end()) free_b.push_back(l);

  std::vector<int> order_a = free_a;
  order_a.insert(order_a.end(), shared.begin(), shared.end());
  std::vector<int> order_b = shared;
  order_b.insert(order_b.end(), free_b.begin(), free_b.end());
  const Tensor pa = permuted(a, order_a);
  const Tensor pb = permuted(b, order_b);

  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto rows = static_cast<Eigen::Index>(tensor_size(a.dim, free_a.size()));
  const auto inner = static_cast<Eigen::Index>(tensor_size(a.dim, shared.size()));
  const auto cols = static_cast<Eigen::Index>(tensor_size(a.dim, free_b.size()));
  Eigen::Map<const RowMat> ma(pa.data.data(), rows, inner);
  Eigen::Map<const RowMat> mb(pb.data.data(), inner, cols);

  Tensor out;
  out.dim = a.dim;
  out.labels = free_a;
  out.labels.insert(out.labels.end(), free_b.begin(), free_b.end());
  out.data.resize(static_cast<std::size_t>(rows * cols));
  Eigen::Map<RowMat> mo(out.data.data(), rows, cols);
  mo.noalias() = ma * mb;
  return out;
}

Tensor contract_network(std::vector<Tensor> tensors, std::uint64_t budget) {
  if (tensors.empty()) throw std::invalid_argument("contract_network: no tensors");
  for (const auto& t : tensors)
    if (static_cast<double>(t.data.size()) > static_cast<double>(budget))
      throw ContractionBudgetExceeded(static_cast<double>(t.data.size()), budget);

  while (tensors.size() > 1) {
    std::size_t best_i = 0, best_j = 1;
    double best_size = std::numeric_limits<double>::infinity();
    bool best_connected = false;
    for (std::size_t i = 0; i < tensors.size(); ++i) {
      for (std::size_t j = i + 1; j < tensors.size(); ++j) {
        std::size_t shared = 0;
        for (int l : tensors[i].labels)
          shared += std::count(tensors[j].labels.begin(), tensors[j].labels.end(), l);
        const bool connected = shared > 0;
        const double size = tensor_size(tensors[i].dim, tensors[i].rank() + tensors[j].rank() - 2 * shared);
        if ((connected && !best_connected) || (connected == best_connected && size < best_size)) {
          best_i = i;
          best_j = j;
          best_size = size;
          best_connected = connected;
        }
      }
    }
    if (best_size > static_cast<double>(budget)) throw ContractionBudgetExceeded(best_size, budget);
    Tensor merged = contract(tensors[best_i], tensors[best_j]);
    tensors.erase(tensors.begin() + static_cast<std::ptrdiff_t>(best_j));
    tensors[best_i] = std::move(merged);
  }
  return std::move(tensors.front());
}

}  // namespace rtn
