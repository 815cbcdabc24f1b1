#include "rtn/moments.hpp"

#include <stdexcept>

namespace rtn {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

BigInt fuss_catalan(unsigned n, unsigned s) { return binomial(s * n + n, n) / (s * n + 1); }

MomentSeq::MomentSeq(std::vector<Rational> moments) : m_(std::move(moments)) {}

Rational MomentSeq::operator[](int k) const {
  if (k == 0) return 1;
  if (k < 0 || k > n_max()) throw std::out_of_range("moment index out of range");
  return m_[k - 1];
}

bool MomentSeq::all_integers() const {
  for (const auto& x : m_)
    if (denominator(x) != 1) return false;
  return true;
}

std::vector<BigInt> MomentSeq::integers() const {
  std::vector<BigInt> out;
  for (const auto& x : m_) {
    if (denominator(x) != 1) throw std::domain_error("moment is not an integer");
    out.push_back(numerator(x));
  }
  return out;
}

PowerSeries s_transform(const MomentSeq& m) {
  const int n = m.n_max();
  if (n < 1) throw std::domain_error("need at least one moment");
  PowerSeries psi(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) psi[k] = m[k];
  if (psi[1] == 0) throw std::domain_error("S-transform undefined: first moment is zero");
  PowerSeries one_plus_z(static_cast<std::size_t>(n - 1));
  one_plus_z[0] = 1;
  if (n > 1) one_plus_z[1] = 1;
  return psi.reversion().divided_by_z() * one_plus_z;
}

MomentSeq moments_from_s_transform(const PowerSeries& s, int n_max) {
  if (n_max < 1 || s.precision() + 1 < static_cast<std::size_t>(n_max))
    throw std::invalid_argument("S-transform precision too low");
  const auto p = static_cast<std::size_t>(n_max - 1);
  PowerSeries one_plus_z(p);
  one_plus_z[0] = 1;
  if (p > 0) one_plus_z[1] = 1;
  const PowerSeries chi = (s.truncated(p) * one_plus_z.reciprocal()).times_z();
  const PowerSeries psi = chi.reversion();
  std::vector<Rational> m;
  for (int k = 1; k <= n_max; ++k) m.push_back(psi[k]);
  return MomentSeq(std::move(m));
}

MomentSeq moments(const MeasureExpr& e, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  using Kind = MeasureExpr::Kind;
  switch (e.kind()) {
    case Kind::One:
      return MomentSeq(std::vector<Rational>(n_max, Rational(1)));
    case Kind::MP: {
      std::vector<Rational> m;
      for (int k = 1; k <= n_max; ++k) m.emplace_back(catalan(k));
      return MomentSeq(std::move(m));
    }
    case Kind::ClassConv: {
      std::vector<Rational> m(n_max, Rational(1));
      for (const auto& child : e.children()) {
        const auto cm = moments(child, n_max);
        for (int k = 1; k <= n_max; ++k) m[k - 1] *= cm[k];
      }
      return MomentSeq(std::move(m));
    }
    case Kind::FreeConv: {
      PowerSeries s;
      bool first = true;
      for (const auto& child : e.children()) {
        PowerSeries cs = s_transform(moments(child, n_max));
        s = first ? cs : s * cs;
        first = false;
      }
      return moments_from_s_transform(s, n_max);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace rtn
