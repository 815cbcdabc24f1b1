#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "rtn/graph.hpp"
#include "rtn/tensor.hpp"

namespace rtn {

inline constexpr std::uint64_t kDefaultContractionBudget = std::uint64_t{1} << 26;

/// Boundary state: one leg of dimension D per half-edge, legs in canonical
/// half-edge order (first leg most significant).
struct TensorState {
  std::vector<Complex> data;
  int dimension = 2;
  std::size_t legs = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Gaussian vertex tensors (E|g|^2 = 1) contracted along bulk edges, each
/// bulk edge contributing D^{-1/2}. Random stream (seed, stream).
TensorState sample_state(const Graph& g, int dimension, std::uint64_t seed, std::uint64_t stream = 0,
                         std::uint64_t budget = kDefaultContractionBudget);

/// M M^dagger with A legs as rows and B legs as columns.
Eigen::MatrixXcd reduced_density(const TensorState& t, const Graph& g);

/// Eigenvalues in descending order. Throws std::invalid_argument if the input
/// is not Hermitian to 1e-10 and std::logic_error if it has eigenvalues below
/// -1e-10 lambda_max or the eigenvalue sum misses the trace by more than 1e-8
/// relative. Negative dust within tolerance is clamped to 0.
std::vector<double> spectrum(const Eigen::MatrixXcd& rho);

/// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

struct SampleStats {
  double trace_tilde = 0;                 // Tr rho~, rho~ = D^{-|E_bd|} rho_A
  std::vector<double> raw_moments;        // Tr rho_A^n, n = 1..n_max
  std::vector<double> normalized_moments; // D^{-F} Tr (D^{F-|E_bd|} rho_A)^n
  std::vector<double> renyi_tilde;        // S_n(rho~), n = 2..n_max
  double vn_tilde = 0;
  std::vector<double> renyi_normalized;   // S_n(rho / Tr rho)
  double vn_normalized = 0;
  double page_gap = 0;                    // F log D - S(rho~)
  bool rank_ok = true;
  double tail_ratio = 0;                  // largest eigenvalue past D^F over lambda_max
};

struct Summary {
  double mean = 0;
  double std_error = 0;
  double variance = 0;
};

Summary summarize(const std::vector<double>& xs);

struct EmpiricalReport {
  int dimension = 0;
  int samples = 0;
  int n_max = 0;
  std::uint64_t seed = 0;
  int maxflow = 0;
  std::vector<SampleStats> per_sample;

  Summary trace_tilde;
  std::vector<Summary> raw_moments;
  std::vector<Summary> normalized_moments;
  std::vector<Summary> renyi_tilde;
  Summary vn_tilde;
  std::vector<Summary> renyi_normalized;
  Summary vn_normalized;
  Summary page_gap;
  bool rank_bound_holds = true;
  double worst_tail_ratio = 0;
  /// The top D^F normalized eigenvalues D^{F-|E_bd|} lambda of every sample.
  std::vector<double> pooled_eigenvalues;
};

/// Sample i uses stream (seed, i).
EmpiricalReport empirical_report(const Graph& g, int dimension, int samples, int n_max, std::uint64_t seed,
                                 std::uint64_t budget = kDefaultContractionBudget);

}  // namespace rtn
