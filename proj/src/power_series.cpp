#include "rtn/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtn {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.resize(1);
}

PowerSeries PowerSeries::truncated(std::size_t precision) const {
  std::vector<Rational> c(c_.begin(), c_.begin() + std::min(c_.size(), precision + 1));
  c.resize(precision + 1);
  return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t p = std::min(a.precision(), b.precision());
  PowerSeries r(p);
  for (std::size_t k = 0; k <= p; ++k) r[k] = a[k] + b[k];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t p = std::min(a.precision(), b.precision());
  PowerSeries r(p);
  for (std::size_t k = 0; k <= p; ++k) r[k] = a[k] - b[k];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t p = std::min(a.precision(), b.precision());
  PowerSeries r(p);
  for (std::size_t i = 0; i <= p; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= p; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

PowerSeries PowerSeries::reciprocal() const {
  if (c_[0] == 0) throw std::domain_error("series with zero constant term has no reciprocal");
  const std::size_t p = precision();
  PowerSeries r(p);
  r[0] = 1 / c_[0];
  for (std::size_t k = 1; k <= p; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r[k - j];
    r[k] = -acc / c_[0];
  }
  return r;
}

PowerSeries PowerSeries::pow(unsigned k) const {
  PowerSeries r(precision());
  r[0] = 1;
  PowerSeries base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

PowerSeries PowerSeries::divided_by_z() const {
  if (c_[0] != 0) throw std::domain_error("series is not divisible by z");
  if (precision() == 0) throw std::domain_error("no coefficients left after division by z");
  return PowerSeries(std::vector<Rational>(c_.begin() + 1, c_.end()));
}

PowerSeries PowerSeries::times_z() const {
  std::vector<Rational> c;
  c.reserve(c_.size() + 1);
  c.emplace_back(0);
  c.insert(c.end(), c_.begin(), c_.end());
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::reversion() const {
  if (c_[0] != 0) throw std::domain_error("reversion needs a zero constant term");
  if (precision() < 1 || c_[1] == 0) throw std::domain_error("reversion needs a nonzero linear term");
  const std::size_t p = precision();
  // h(w) = w / f(w) = 1 / (f(w)/w), known to order p-1.
  const PowerSeries h = divided_by_z().reciprocal();
  PowerSeries g(p);
  PowerSeries hk(p - 1);
  hk[0] = 1;
  for (std::size_t k = 1; k <= p; ++k) {
    hk = hk * h;
    g[k] = hk[k - 1] / k;
  }
  return g;
}

PowerSeries PowerSeries::compose(const PowerSeries& g) const {
  if (g[0] != 0) throw std::domain_error("inner series must have zero constant term");
  const std::size_t p = std::min(precision(), g.precision());
  PowerSeries r(p);
  // Horner: f(g) = c_0 + g (c_1 + g (c_2 + ...)).
  for (std::size_t k = p + 1; k-- > 0;) {
    r = r * g.truncated(p);
    r[0] += c_[k];
  }
  return r;
}

}  // namespace rtn
