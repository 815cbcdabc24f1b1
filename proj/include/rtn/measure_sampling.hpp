#pragma once

#include <cstdint>
#include <vector>

#include "rtn/measure_expr.hpp"
#include "rtn/moments.hpp"

namespace rtn {

/// Eigenvalue draws from the random-matrix model of a measure expression.
struct SpectrumSample {
  std::vector<std::vector<double>> draws;  // one eigenvalue list per draw
  std::uint64_t seed = 0;
  int size = 0;

  std::vector<double> pooled() const;
  /// Empirical k-th moment of the pooled eigenvalues.
  double moment(int k) const;
};

/// Matrix model: One -> all ones; MP -> spectrum of G G^* / size; a free
/// product folds its children left to right (an MP factor is applied as the
/// sandwich G diag(acc) G^* / size, any other factor through a Haar
/// rotation); a classical product multiplies independently shuffled draws.
/// Draw i uses the random stream (seed, i). Throws std::invalid_argument if
/// size < 2.
SpectrumSample sample_spectrum(const MeasureExpr& e, int size, int count, std::uint64_t seed);

/// log(m_n) / (n - 1). Throws std::out_of_range unless 2 <= n <= m.n_max().
double renyi_correction(const MomentSeq& m, int n);

struct VnMethod {
  bool prefer_exact = true;
  int size = 200;
  int count = 20;
  std::uint64_t seed = 0;
};

struct VnEstimate {
  double value = 0;
  double std_error = 0;
  bool exact = false;
};

/// Integral of t log t against the measure. Closed form sum_{i=2}^{s+1} 1/i
/// for MP^{boxtimes s}; otherwise the mean over draws of the per-draw average
/// of lambda log lambda, with its standard error.
VnEstimate vn_correction(const MeasureExpr& e, const VnMethod& method = {});
/// The sampled branch of vn_correction applied to existing draws.
VnEstimate vn_from_sample(const SpectrumSample& sample);

/// t log t with 0 log 0 = 0.
double xlogx(double t);

struct Histogram {
  std::vector<double> edges;  // bins + 1 entries
  std::vector<std::uint64_t> counts;
};

/// Equal-width bins over [min, max] of the data (max inclusive).
Histogram make_histogram(const std::vector<double>& values, int bins);

}  // namespace rtn
