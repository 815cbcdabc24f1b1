#include "rtn/tn_sim.hpp"

#include <algorithm>
#include <cmath>

#include "rtn/flow.hpp"
#include "rtn/measure_sampling.hpp"
#include "rtn/rng.hpp"

namespace rtn {

TensorState sample_state(const Graph& g, int dimension, std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t budget) {
  if (dimension < 2) throw std::invalid_argument("bond dimension must be at least 2");
  if (const auto v = validate(g); !v.ok()) throw GraphError("invalid graph: " + v.violations.front());

  const int nb = static_cast<int>(g.bulk_count());
  std::vector<std::vector<int>> legs(g.vertex_count());
  for (int e = 0; e < nb; ++e) {
    legs[g.index_of(g.bulk_edges()[e].u)].push_back(e);
    legs[g.index_of(g.bulk_edges()[e].v)].push_back(e);
  }
  for (std::size_t h = 0; h < g.boundary_count(); ++h)
    legs[g.index_of(g.half_edges()[h].vertex)].push_back(nb + static_cast<int>(h));

  Rng rng(seed, stream);
  std::vector<Tensor> tensors;
  for (auto& l : legs) {
    const double size = tensor_size(dimension, l.size());
    if (size > static_cast<double>(budget)) throw ContractionBudgetExceeded(size, budget);
    Tensor t{l, std::vector<Complex>(static_cast<std::size_t>(size)), dimension};
    for (auto& x : t.data) x = rng.complex_normal();
    tensors.push_back(std::move(t));
  }

  Tensor out = contract_network(std::move(tensors), budget);
  std::vector<int> order;
  for (std::size_t h = 0; h < g.boundary_count(); ++h) order.push_back(nb + static_cast<int>(h));
  out = permuted(out, order);

  const double scale = std::pow(static_cast<double>(dimension), -0.5 * nb);
  for (auto& x : out.data) x *= scale;
  return {std::move(out.data), dimension, g.boundary_count(), seed, stream};
}

Eigen::MatrixXcd reduced_density(const TensorState& t, const Graph& g) {
  if (t.legs != g.boundary_count()) throw std::invalid_argument("state does not match graph");
  const auto p = bipartition(g);
  std::vector<int> labels(t.legs), order;
  for (std::size_t i = 0; i < t.legs; ++i) labels[i] = static_cast<int>(i);
  for (auto i : p.a) order.push_back(static_cast<int>(i));
  for (auto i : p.b) order.push_back(static_cast<int>(i));
  const Tensor m = permuted(Tensor{labels, t.data, t.dimension}, order);

  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto rows = static_cast<Eigen::Index>(tensor_size(t.dimension, p.a.size()));
  const auto cols = static_cast<Eigen::Index>(tensor_size(t.dimension, p.b.size()));
  Eigen::Map<const RowMat> mm(m.data.data(), rows, cols);
  Eigen::MatrixXcd rho = mm * mm.adjoint();
  return rho;
}

std::vector<double> spectrum(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("spectrum: matrix is not square");
  const double scale = std::max(1e-300, rho.cwiseAbs().maxCoeff());
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("spectrum: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("spectrum: eigenvalue solver failed");
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), std::greater<>());
  const double top = std::max(0.0, ev.front());
  double sum = 0;
  for (auto& x : ev) {
    sum += x;
    if (x < 0) {
      if (x < -1e-10 * top) throw std::logic_error("spectrum: matrix is not positive semidefinite");
      x = 0;
    }
  }
  const double trace = rho.trace().real();
  if (std::abs(sum - trace) > 1e-8 * std::max(std::abs(trace), 1e-300))
    throw std::logic_error("spectrum: eigenvalues do not sum to the trace");
  return ev;
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

Summary summarize(const std::vector<double>& xs) {
  Summary s;
  if (xs.empty()) return s;
  const double k = static_cast<double>(xs.size());
  CompensatedSum sum;
  for (double x : xs) sum.add(x);
  s.mean = sum.value() / k;
  if (xs.size() > 1) {
    CompensatedSum sq;
    for (double x : xs) sq.add((x - s.mean) * (x - s.mean));
    s.variance = sq.value() / (k - 1);
    s.std_error = std::sqrt(s.variance / k);
  }
  return s;
}

namespace {

double renyi(const std::vector<double>& p, int n) {
  double s = 0;
  for (double x : p) s += std::pow(x, n);
  return std::log(s) / (1 - n);
}

double von_neumann(const std::vector<double>& p) {
  double s = 0;
  for (double x : p) s -= xlogx(x);
  return s;
}

std::vector<Summary> summarize_columns(const std::vector<SampleStats>& ss,
                                       std::vector<double> SampleStats::*field) {
  std::vector<Summary> out;
  if (ss.empty()) return out;
  for (std::size_t k = 0; k < (ss.front().*field).size(); ++k) {
    std::vector<double> col;
    for (const auto& s : ss) col.push_back((s.*field)[k]);
    out.push_back(summarize(col));
  }
  return out;
}

Summary summarize_field(const std::vector<SampleStats>& ss, double SampleStats::*field) {
  std::vector<double> col;
  for (const auto& s : ss) col.push_back(s.*field);
  return summarize(col);
}

}  // namespace

EmpiricalReport empirical_report(const Graph& g, int dimension, int samples, int n_max, std::uint64_t seed,
                                 std::uint64_t budget) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  EmpiricalReport r;
  r.dimension = dimension;
  r.samples = samples;
  r.n_max = n_max;
  r.seed = seed;
  r.maxflow = max_flow(build_flow_network(g)).value;

  const double d = dimension;
  const int f = r.maxflow;
  const int eb = static_cast<int>(g.boundary_count());
  const double tilde = std::pow(d, -eb);
  const double norm = std::pow(d, f - eb);
  const double rank_bound = std::pow(d, f);

  for (int i = 0; i < samples; ++i) {
    const auto state = sample_state(g, dimension, seed, static_cast<std::uint64_t>(i), budget);
    const auto ev = spectrum(reduced_density(state, g));
    SampleStats s;

    CompensatedSum tr;
    for (double x : ev) tr.add(x);
    s.trace_tilde = tr.value() * tilde;

    for (int n = 1; n <= n_max; ++n) {
      CompensatedSum raw, nm;
      for (double x : ev) {
        raw.add(std::pow(x, n));
        nm.add(std::pow(norm * x, n));
      }
      s.raw_moments.push_back(raw.value());
      s.normalized_moments.push_back(nm.value() / rank_bound);
    }

    std::vector<double> pt(ev.size()), pn(ev.size());
    for (std::size_t k = 0; k < ev.size(); ++k) {
      pt[k] = ev[k] * tilde;
      pn[k] = ev[k] / tr.value();
    }
    for (int n = 2; n <= n_max; ++n) {
      s.renyi_tilde.push_back(renyi(pt, n));
      s.renyi_normalized.push_back(renyi(pn, n));
    }
    s.vn_tilde = von_neumann(pt);
    s.vn_normalized = von_neumann(pn);
    s.page_gap = f * std::log(d) - s.vn_tilde;

    const double top = ev.front();
    for (std::size_t k = 0; k < ev.size(); ++k) {
      if (static_cast<double>(k) < rank_bound) {
        r.pooled_eigenvalues.push_back(norm * ev[k]);
        continue;
      }
      s.tail_ratio = std::max(s.tail_ratio, top > 0 ? ev[k] / top : 0.0);
    }
    s.rank_ok = s.tail_ratio < 1e-10;
    r.rank_bound_holds = r.rank_bound_holds && s.rank_ok;
    r.worst_tail_ratio = std::max(r.worst_tail_ratio, s.tail_ratio);
    r.per_sample.push_back(std::move(s));
  }

  r.trace_tilde = summarize_field(r.per_sample, &SampleStats::trace_tilde);
  r.raw_moments = summarize_columns(r.per_sample, &SampleStats::raw_moments);
  r.normalized_moments = summarize_columns(r.per_sample, &SampleStats::normalized_moments);
  r.renyi_tilde = summarize_columns(r.per_sample, &SampleStats::renyi_tilde);
  r.renyi_normalized = summarize_columns(r.per_sample, &SampleStats::renyi_normalized);
  r.vn_tilde = summarize_field(r.per_sample, &SampleStats::vn_tilde);
  r.vn_normalized = summarize_field(r.per_sample, &SampleStats::vn_normalized);
  r.page_gap = summarize_field(r.per_sample, &SampleStats::page_gap);
  return r;
}

}  // namespace rtn
