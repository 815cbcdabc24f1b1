#include "rtn/measure_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "rtn/rng.hpp"

namespace rtn {

namespace {

using CMatrix = Eigen::MatrixXcd;

CMatrix ginibre(int n, Rng& rng) {
  CMatrix g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = rng.complex_normal();
  return g;
}

CMatrix haar_unitary(int n, Rng& rng) {
  Eigen::HouseholderQR<CMatrix> qr(ginibre(n, rng));
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const auto d = r(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : 1.0;
  }
  return q;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue solver failed");
  const auto& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<double> out(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double x = ev(i);
    if (x < 1e-10 * scale) {
      if (x < -1e-8 * scale) throw std::logic_error("sampled matrix is not positive semidefinite");
      x = 0;
    }
    out[i] = x;
  }
  return out;
}

std::vector<double> draw(const MeasureExpr& e, int n, Rng& rng) {
  using Kind = MeasureExpr::Kind;
  switch (e.kind()) {
    case Kind::One:
      return std::vector<double>(n, 1.0);
    case Kind::MP: {
      const CMatrix g = ginibre(n, rng);
      return hermitian_eigenvalues(g * g.adjoint() / n);
    }
    case Kind::ClassConv: {
      std::vector<double> acc(n, 1.0);
      for (const auto& c : e.children()) {
        auto d = draw(c, n, rng);
        rng.shuffle(d);
        for (int i = 0; i < n; ++i) acc[i] *= d[i];
      }
      return acc;
    }
    case Kind::FreeConv: {
      std::vector<double> acc(n, 1.0);
      for (const auto& c : e.children()) {
        Eigen::VectorXd a = Eigen::Map<const Eigen::VectorXd>(acc.data(), n);
        if (c.kind() == Kind::One) continue;
        if (c.kind() == Kind::MP) {
          const CMatrix g = ginibre(n, rng);
          acc = hermitian_eigenvalues(g * a.asDiagonal() * g.adjoint() / n);
          continue;
        }
        const auto b = draw(c, n, rng);
        const Eigen::VectorXd bv = Eigen::Map<const Eigen::VectorXd>(b.data(), n);
        const CMatrix u = haar_unitary(n, rng);
        const Eigen::VectorXd sa = a.cwiseSqrt();
        CMatrix m = u * bv.asDiagonal() * u.adjoint();
        m = sa.asDiagonal() * m * sa.asDiagonal();
        acc = hermitian_eigenvalues((m + m.adjoint()) / 2.0);
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<double> SpectrumSample::pooled() const {
  std::vector<double> out;
  for (const auto& d : draws) out.insert(out.end(), d.begin(), d.end());
  return out;
}

double SpectrumSample::moment(int k) const {
  double sum = 0;
  std::size_t total = 0;
  for (const auto& d : draws) {
    for (double x : d) sum += std::pow(x, k);
    total += d.size();
  }
  return total ? sum / static_cast<double>(total) : 0.0;
}

SpectrumSample sample_spectrum(const MeasureExpr& e, int size, int count, std::uint64_t seed) {
  if (size < 2) throw std::invalid_argument("sample_spectrum: size must be at least 2");
  if (count < 1) throw std::invalid_argument("sample_spectrum: count must be positive");
  const MeasureExpr c = e.canonical();
  SpectrumSample s;
  s.seed = seed;
  s.size = size;
  for (int i = 0; i < count; ++i) {
    Rng rng(seed, static_cast<std::uint64_t>(i));
    s.draws.push_back(draw(c, size, rng));
  }
  return s;
}

double renyi_correction(const MomentSeq& m, int n) {
  if (n < 2 || n > m.n_max()) throw std::out_of_range("renyi_correction: order out of range");
  return std::log(m[n].convert_to<double>()) / (n - 1);
}

double xlogx(double t) { return t > 0 ? t * std::log(t) : 0.0; }

VnEstimate vn_correction(const MeasureExpr& e, const VnMethod& method) {
  if (method.prefer_exact) {
    if (auto s = e.mp_power_exponent()) {
      double v = 0;
      for (int i = 2; i <= *s + 1; ++i) v += 1.0 / i;
      return {v, 0.0, true};
    }
  }
  return vn_from_sample(sample_spectrum(e, method.size, method.count, method.seed));
}

VnEstimate vn_from_sample(const SpectrumSample& sample) {
  std::vector<double> per_draw;
  for (const auto& d : sample.draws) {
    double acc = 0;
    for (double x : d) acc += xlogx(x);
    per_draw.push_back(acc / static_cast<double>(d.size()));
  }
  const double k = static_cast<double>(per_draw.size());
  double mean = 0;
  for (double x : per_draw) mean += x;
  mean /= k;
  double var = 0;
  for (double x : per_draw) var += (x - mean) * (x - mean);
  const double se = per_draw.size() > 1 ? std::sqrt(var / (k - 1) / k) : 0.0;
  return {mean, se, false};
}

Histogram make_histogram(const std::vector<double>& values, int bins) {
  if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
  Histogram h;
  h.counts.assign(bins, 0);
  if (values.empty()) {
    for (int i = 0; i <= bins; ++i) h.edges.push_back(static_cast<double>(i) / bins);
    return h;
  }
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it, hi = *hi_it;
  if (hi <= lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double w = (hi - lo) / bins;
  for (int i = 0; i <= bins; ++i) h.edges.push_back(lo + w * i);
  for (double x : values) {
    int b = static_cast<int>((x - lo) / w);
    h.counts[std::clamp(b, 0, bins - 1)]++;
  }
  return h;
}

}  // namespace rtn
