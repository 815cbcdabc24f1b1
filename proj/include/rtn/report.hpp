#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "rtn/measure_sampling.hpp"

namespace rtn {

inline constexpr const char* kToolVersion = "0.1.0";

/// A cross-check between independent computations disagreed.
class InvariantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 64-bit FNV-1a of the input, as 16 hex digits.
std::string input_hash(std::string_view text);

struct AnalyzeOptions {
  int n_max = 5;
  /// Enumeration budget for the exact cross-check; orders whose state space
  /// exceeds it are skipped, not failed.
  std::uint64_t oracle_budget = 1'000'000;
  bool moments_only = false;
  /// Kept small so analysis stays interactive; sample-measure is the tool for
  /// tight estimates.
  VnMethod vn_method{true, 100, 8, 0};
};

/// Flow, cut, clusters, order graph, measure expression, limit moments from
/// both engines where available, and predicted entropy corrections. Throws
/// GraphError on unparsable or invalid input and InvariantFailure if the two
/// moment engines disagree.
nlohmann::json cmd_analyze(std::string_view graph_text, const AnalyzeOptions& opt = {});

/// Hamiltonian histograms for E Tr rho_A^n and E (Tr rho_A)^n, optionally
/// evaluated at a bond dimension.
nlohmann::json cmd_oracle(std::string_view graph_text, int n, std::optional<double> dimension,
                          std::uint64_t budget);

struct SimulateOptions {
  int dimension = 2;
  int samples = 100;
  int n_max = 5;
  std::uint64_t seed = 0;
  bool per_sample = false;
  int bins = 60;
};

struct CommandOutput {
  nlohmann::json json;
  std::string csv;
};

/// Monte Carlo report; the CSV is a histogram of pooled normalized
/// eigenvalues.
CommandOutput cmd_simulate(std::string_view graph_text, const SimulateOptions& opt);

/// Pooled spectrum histogram of a measure expression plus entropy and moment
/// estimates against the exact engine.
CommandOutput cmd_sample_measure(std::string_view expr_text, int size, int count, std::uint64_t seed,
                                 int bins);

std::string histogram_csv(const Histogram& h);

}  // namespace rtn
