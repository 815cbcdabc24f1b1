#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rtn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Truncated formal power series c_0 + c_1 z + ... + c_N z^N over exact
/// rationals. All binary operations truncate to the shorter precision.
class PowerSeries {
 public:
  PowerSeries() = default;
  /// Zero series known up to z^precision.
  explicit PowerSeries(std::size_t precision) : c_(precision + 1) {}
  explicit PowerSeries(std::vector<Rational> coeffs);

  std::size_t precision() const { return c_.empty() ? 0 : c_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  Rational& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Rational>& coefficients() const { return c_; }

  PowerSeries truncated(std::size_t precision) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  /// 1/f; throws std::domain_error if c_0 == 0.
  PowerSeries reciprocal() const;
  PowerSeries pow(unsigned k) const;
  /// f(z)/z for a series with c_0 == 0 (precision drops by one).
  PowerSeries divided_by_z() const;
  /// z f(z) (precision grows by one).
  PowerSeries times_z() const;
  /// Compositional inverse g with f(g(z)) = z, for c_0 = 0 and c_1 != 0,
  /// by Lagrange inversion: [z^k] g = (1/k) [w^{k-1}] (w/f(w))^k.
  /// Throws std::domain_error otherwise.
  PowerSeries reversion() const;
  /// f(g(z)) for g with zero constant term.
  PowerSeries compose(const PowerSeries& g) const;

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<Rational> c_;
};

}  // namespace rtn
