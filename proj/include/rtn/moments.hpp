#pragma once

#include <vector>

#include "rtn/measure_expr.hpp"
#include "rtn/power_series.hpp"

namespace rtn {

BigInt binomial(unsigned n, unsigned k);
/// Cat_n = C(2n, n) / (n + 1).
BigInt catalan(unsigned n);
/// FC_{n,s} = C(sn + n, n) / (sn + 1); moments of MP^{boxtimes s}.
BigInt fuss_catalan(unsigned n, unsigned s);

/// Moments m_1..m_{n_max}; m_0 = 1 is implicit.
class MomentSeq {
 public:
  explicit MomentSeq(std::vector<Rational> moments);

  int n_max() const { return static_cast<int>(m_.size()); }
  /// m_k for 0 <= k <= n_max.
  Rational operator[](int k) const;
  const std::vector<Rational>& values() const { return m_; }

  bool all_integers() const;
  /// Throws std::domain_error if some moment is not an integer.
  std::vector<BigInt> integers() const;

  bool operator==(const MomentSeq&) const = default;

 private:
  std::vector<Rational> m_;
};

/// S-transform S(z) = chi(z) (1 + z) / z with chi the compositional inverse
/// of psi(z) = sum_k m_k z^k; known to order n_max - 1. Throws
/// std::domain_error when m_1 == 0.
PowerSeries s_transform(const MomentSeq& m);
MomentSeq moments_from_s_transform(const PowerSeries& s, int n_max);

/// Exact moments of a measure expression: One -> 1, MP -> Catalan, classical
/// products multiply moments, free products multiply S-transforms.
MomentSeq moments(const MeasureExpr& e, int n_max);

}  // namespace rtn
